#pragma once

#include "icc/bounds.hpp"
#include "icc/budget.hpp"
#include "icc/codec.hpp"
#include "icc/corpus.hpp"
#include "icc/digraph.hpp"
#include "icc/error.hpp"
#include "icc/galois.hpp"
#include "icc/ic.hpp"
#include "icc/io.hpp"
#include "icc/report.hpp"
#include "icc/schemes.hpp"
#include "icc/simplex.hpp"
