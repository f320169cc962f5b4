/*!
  \file tqs.hpp
  \brief Everything at once
*/

#pragma once

#include "bench.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "gates.hpp"
#include "netlist_io.hpp"
#include "sim.hpp"
#include "simplify.hpp"
#include "synth.hpp"
#include "trit.hpp"
#include "truth_table.hpp"
