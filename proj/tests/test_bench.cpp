#include <catch_amalgamated.hpp>

#include <tqs/bench.hpp>

using namespace tqs;

namespace
{

bench_row const& row_of( std::vector<bench_row> const& rows, std::string_view name )
{
  auto it = std::find_if( rows.begin(), rows.end(), [&]( bench_row const& r ) { return r.circuit == name; } );
  REQUIRE( it != rows.end() );
  return *it;
}

} // namespace

TEST_CASE( "benchmark suite runs and verifies", "[bench]" )
{
  auto const rows = run_benchmarks();
  REQUIRE( rows.size() == 22 );
  CHECK( all_verified( rows ) );

  auto const& sum3 = row_of( rows, "sum3" );
  CHECK( sum3.cost == 8 );
  CHECK( sum3.reduced_ancilla == 0 );
  CHECK( sum3.reference_match == match::yes );

  auto const& prod6 = row_of( rows, "prod6" );
  CHECK( prod6.cost == 90 );
  CHECK( prod6.reduced_ancilla == 15 );
  CHECK( prod6.max_ancilla == 384 );
  CHECK( prod6.reference_match == match::yes );

  auto const& avg2 = row_of( rows, "avg2" );
  REQUIRE( avg2.reference );
  CHECK( avg2.reference->cost == 38 );
  CHECK( avg2.reference_match == match::not_certified );
  CHECK( avg2.agrees_with_reference );

  CHECK( row_of( rows, "tfadd" ).max_ancilla_match == match::not_certified );
  CHECK( row_of( rows, "g_example" ).reference == std::nullopt );
  for ( auto const& r : rows )
  {
    INFO( r.circuit );
    CHECK( r.reference_match != match::no );
    CHECK( r.max_ancilla_match != match::no );
  }
}

TEST_CASE( "reference table lookups", "[bench]" )
{
  CHECK( find_reference( "mul2" )->cost == 23 );
  CHECK_FALSE( find_reference( "mul9" ) );
  CHECK( bench_circuits().size() == reference_table.size() + 2 );
}

TEST_CASE( "benchmark JSON is deterministic", "[bench]" )
{
  auto const a = to_json( run_benchmarks() ).dump( 2 );
  auto const b = to_json( run_benchmarks() ).dump( 2 );
  CHECK( a == b );
  auto const j = ordered_json::parse( a );
  CHECK( j["format"] == "tqs-bench" );
  CHECK( j["rows"].size() == 22 );
}

TEST_CASE( "benchmark text table", "[bench]" )
{
  auto const text = to_text( { bench_one( "mul2" ), bench_one( "g_example" ) } );
  CHECK( text.find( "mul2" ) != std::string::npos );
  CHECK( text.find( "g_example" ) != std::string::npos );
  CHECK( std::count( text.begin(), text.end(), '\n' ) >= 3 );
}
