#pragma once

#include "fstag/compose.hpp"
#include "fstag/config.hpp"
#include "fstag/constraints.hpp"
#include "fstag/corpus.hpp"
#include "fstag/diagnostics.hpp"
#include "fstag/format.hpp"
#include "fstag/genotype.hpp"
#include "fstag/lattice.hpp"
#include "fstag/lexicon.hpp"
#include "fstag/ngram_model.hpp"
#include "fstag/pipeline.hpp"
#include "fstag/scoring.hpp"
#include "fstag/shortest_path.hpp"
#include "fstag/symbol_table.hpp"
#include "fstag/tagset.hpp"
#include "fstag/tokenizer.hpp"
#include "fstag/trim.hpp"
#include "fstag/utf8.hpp"
#include "fstag/weight.hpp"
#include "fstag/wfst.hpp"
#include "fstag/wfst_io.hpp"
