#pragma once

// Umbrella header: exact graded symmetric-function engine for the Orlik-Terao
// recursion, the configuration-space characteristics it pairs against, and
// the graphical f/h-polynomial identities.

#include "otsym/bigint.hpp"
#include "otsym/character_table.hpp"
#include "otsym/core.hpp"
#include "otsym/graph.hpp"
#include "otsym/json_io.hpp"
#include "otsym/ot_recursion.hpp"
#include "otsym/parallel.hpp"
#include "otsym/partition.hpp"
#include "otsym/qseries.hpp"
#include "otsym/rational.hpp"
#include "otsym/rep_formulas.hpp"
#include "otsym/symfunc.hpp"
#include "otsym/verifier.hpp"
