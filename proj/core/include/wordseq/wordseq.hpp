#pragma once

#include "wordseq/dol.hpp"
#include "wordseq/dragon.hpp"
#include "wordseq/errors.hpp"
#include "wordseq/seqcore.hpp"
#include "wordseq/verifier.hpp"
#include "wordseq/word.hpp"
