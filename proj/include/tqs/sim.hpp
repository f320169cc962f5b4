/*!
  \file sim.hpp
  \brief Netlist simulation and exhaustive equivalence checking
*/

#pragma once

#include "error.hpp"
#include "gates.hpp"
#include "truth_table.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tqs
{

struct sim_result
{
  std::vector<std::pair<std::string, trit>> outputs;
  std::vector<trit> state;
};

/*! \brief Runs the gate list once with inputs bound in declaration order. */
[[nodiscard]] inline sim_result simulate( netlist const& n, std::span<trit const> input )
{
  if ( input.size() != n.inputs().size() )
  {
    throw input_error( "simulation expects " + std::to_string( n.inputs().size() ) + " inputs, got " + std::to_string( input.size() ) );
  }
  auto state = n.initial_state();
  for ( std::size_t i = 0; i < input.size(); ++i )
  {
    state[n.inputs()[i].index] = input[i];
  }
  for ( auto const& g : n.gates() )
  {
    apply_gate_inplace( g, state );
  }
  sim_result r;
  for ( auto const& [name, w] : n.outputs() )
  {
    r.outputs.emplace_back( name, state[w.index] );
  }
  r.state = std::move( state );
  return r;
}

struct mismatch
{
  std::vector<trit> input;
  std::string output_name;
  trit expected;
  trit actual;
};

struct check_result
{
  bool passed{ true };
  std::optional<mismatch> counterexample;

  explicit operator bool() const noexcept { return passed; }
};

/*! \brief Compares the i-th netlist output with the i-th function output on
 * all 3^m inputs; the first mismatch in lexicographic order is reported. */
[[nodiscard]] inline check_result exhaustive_check( netlist const& n, multi_output_function const& f )
{
  if ( n.inputs().size() != f.arity() )
  {
    throw input_error( "netlist has " + std::to_string( n.inputs().size() ) + " inputs but the table has arity " + std::to_string( f.arity() ) );
  }
  if ( n.outputs().size() != f.num_outputs() )
  {
    throw input_error( "netlist has " + std::to_string( n.outputs().size() ) + " outputs but the table has " + std::to_string( f.num_outputs() ) );
  }
  check_result result;
  for_each_input( f.arity(), [&]( std::size_t idx, std::vector<trit> const& in ) {
    if ( !result.passed )
      return;
    auto const r = simulate( n, in );
    for ( std::size_t k = 0; k < f.num_outputs(); ++k )
    {
      auto const want = f.output( k ).at( idx );
      if ( r.outputs[k].second != want )
      {
        result.passed = false;
        result.counterexample = mismatch{ in, f.output( k ).name(), want, r.outputs[k].second };
        return;
      }
    }
  } );
  return result;
}

} // namespace tqs
