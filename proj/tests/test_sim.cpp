#include <catch_amalgamated.hpp>

#include <tqs/sim.hpp>

using namespace tqs;

namespace
{

/* a + b onto a */
netlist adder()
{
  netlist n;
  auto const a = n.add_input( "a" ), b = n.add_input( "b" );
  n.add_gate( feynman_gate{ b, a } );
  n.set_output( "s", a );
  return n;
}

} // namespace

TEST_CASE( "simulation binds inputs in declaration order", "[sim]" )
{
  auto const n = adder();
  std::vector<trit> const x{ trit( 2 ), trit( 2 ) };
  auto const r = simulate( n, x );
  REQUIRE( r.outputs.size() == 1 );
  CHECK( r.outputs[0].first == "s" );
  CHECK( r.outputs[0].second == trit( 1 ) );
  CHECK( r.state == std::vector<trit>{ trit( 1 ), trit( 2 ) } );
  CHECK_THROWS( simulate( n, std::vector<trit>{ trit( 0 ) } ) );
}

TEST_CASE( "ancillae start at their initial value", "[sim]" )
{
  netlist n;
  auto const a = n.add_input( "a" );
  auto const t = n.add_ancilla( trit( 2 ) );
  n.add_gate( min_gate{ { a }, t } );
  n.set_output( "f", t );
  for ( auto v : all_trits )
  {
    std::vector<trit> x{ v };
    CHECK( simulate( n, x ).outputs[0].second == v );
  }
}

TEST_CASE( "exhaustive check accepts the matching table", "[sim]" )
{
  auto const r = exhaustive_check( adder(), builtin( "sumh" ) );
  CHECK( r );
  CHECK_FALSE( r.counterexample );
}

TEST_CASE( "exhaustive check reports the first failing input", "[sim]" )
{
  auto const r = exhaustive_check( adder(), builtin( "carryh" ) );
  REQUIRE_FALSE( r );
  REQUIRE( r.counterexample );
  CHECK( format_input( r.counterexample->input ) == "(0,1)" );
  CHECK( r.counterexample->output_name == "carryh" );
  CHECK( r.counterexample->expected == trit( 0 ) );
  CHECK( r.counterexample->actual == trit( 1 ) );
}

TEST_CASE( "exhaustive check rejects shape mismatches", "[sim]" )
{
  CHECK_THROWS_AS( exhaustive_check( adder(), builtin( "mul3c" ) ), error );
  CHECK_THROWS_AS( exhaustive_check( adder(), builtin( "thadd" ) ), error );
}
