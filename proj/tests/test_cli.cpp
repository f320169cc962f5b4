#include <catch_amalgamated.hpp>

#include <tqs/cli.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tqs;

namespace
{

struct run_result
{
  int code;
  std::string out;
  std::string err;
};

run_result run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  int const code = run_cli( std::move( args ), out, err );
  return { code, out.str(), err.str() };
}

std::filesystem::path scratch( std::string const& name )
{
  auto const dir = std::filesystem::temp_directory_path() / "tqs_test_cli";
  std::filesystem::create_directories( dir );
  return dir / name;
}

void write( std::filesystem::path const& p, std::string const& text )
{
  std::ofstream( p ) << text;
}

std::string const data_dir = TQS_DATA_DIR;

} // namespace

TEST_CASE( "synth prints a summary line", "[cli]" )
{
  auto const r = run( { "synth", "mul2" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "mul2: cost=23 (paper)" ) != std::string::npos );
  CHECK( r.out.find( "ancilla=4" ) != std::string::npos );
  CHECK( r.out.find( "verified=yes" ) != std::string::npos );

  auto const s = run( { "synth", "sum5" } );
  CHECK( s.code == 0 );
  CHECK( s.out.find( "cost=16" ) != std::string::npos );
  CHECK( s.out.find( "ancilla=0" ) != std::string::npos );
}

TEST_CASE( "synth writes a netlist that verify accepts", "[cli]" )
{
  auto const net = scratch( "g.json" );
  auto const r = run( { "synth", data_dir + "/g.tt", "-o", net.string() } );
  REQUIRE( r.code == 0 );
  CHECK( r.out.starts_with( "g: " ) );

  auto const v = run( { "verify", net.string(), data_dir + "/g.tt" } );
  CHECK( v.code == 0 );
  CHECK( v.out == "PASS: 9 inputs checked\n" );

  auto const wrong = run( { "verify", net.string(), "mul2" } );
  CHECK( wrong.code == 2 );

  auto const other = scratch( "other.tt" );
  write( other, "vars a b\noutputs 1\n012111211 g\n" );
  auto const f = run( { "verify", net.string(), other.string() } );
  CHECK( f.code == 3 );
  CHECK( f.out == "FAIL: counterexample (2,2): output g expected 1, got 2\n" );
}

TEST_CASE( "synth options", "[cli]" )
{
  auto const text = run( { "synth", "sum3", "--format", "text", "--print" } );
  CHECK( text.code == 0 );
  CHECK( text.out.find( "feynman b -> a" ) != std::string::npos );

  auto const strict = run( { "synth", "mul2", "--cost-model", "strict", "--combine", "shared" } );
  CHECK( strict.code == 0 );
  CHECK( strict.out.find( "(strict)" ) != std::string::npos );
  CHECK( strict.out.find( "[shared-accumulator]" ) != std::string::npos );

  auto const explain = run( { "synth", "carryh", "--explain" } );
  CHECK( explain.out.find( "minterms:" ) != std::string::npos );
  CHECK( explain.out.find( "rule 8" ) != std::string::npos );

  CHECK( run( { "synth", "mul2", "--format", "yaml" } ).code == 2 );
  CHECK( run( { "synth", "mul2", "--combine", "both" } ).code == 2 );
  CHECK( run( { "synth", "mul2", "--cost-model", "free" } ).code == 2 );
}

TEST_CASE( "table and simplify-only", "[cli]" )
{
  auto const t = run( { "table", "thadd" } );
  CHECK( t.code == 0 );
  CHECK( t.out == to_truth_table_text( builtin( "thadd" ) ) );

  auto const s = run( { "simplify-only", "carryh" } );
  CHECK( s.code == 0 );
  CHECK( s.out == "carryh = PairL(a,b) + L2(a,b)\n" );
}

TEST_CASE( "bench subcommand", "[cli][bench]" )
{
  auto const b = run( { "bench", "--json" } );
  CHECK( b.code == 0 );
  CHECK( ordered_json::parse( b.out )["rows"].size() == 22 );
}

TEST_CASE( "input errors exit with code 2", "[cli]" )
{
  auto const unknown = run( { "synth", "no_such_function" } );
  CHECK( unknown.code == 2 );
  CHECK( unknown.err.find( "no_such_function" ) != std::string::npos );

  auto const bad = scratch( "bad.tt" );
  write( bad, "vars a b\noutputs 1\n01x111212 g\n" );
  auto const p = run( { "synth", bad.string() } );
  CHECK( p.code == 2 );
  CHECK( p.err.find( "line 3, column 3" ) != std::string::npos );

  CHECK( run( { "frobnicate" } ).code == 2 );
  CHECK( run( { "verify", "only-one-arg" } ).code == 2 );
  CHECK( run( { "verify", scratch( "missing.json" ).string(), "mul2" } ).code == 2 );
}

TEST_CASE( "help exits cleanly", "[cli]" )
{
  auto const h = run( { "--help" } );
  CHECK( h.code == 0 );
  CHECK( h.out.find( "synth" ) != std::string::npos );
}
