/*!
  \file acceptance.cpp
  \brief One pass/fail line per acceptance criterion

  Usage: acceptance <path-to-tqsynth>. Exits nonzero if any criterion fails.
*/

#include "support.hpp"

#include <tqs/tqs.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace tqs;

namespace
{

/* every criterion is exact: integer and trit equalities, no slack */
constexpr std::uint64_t cost_tolerance = 0;
constexpr std::size_t ancilla_tolerance = 0;
constexpr std::size_t min_random_expressions = 1000;
constexpr std::size_t max_random_arity = 4;

struct outcome
{
  bool passed{ true };
  std::string detail;

  void require( bool ok, std::string const& what )
  {
    if ( !ok && passed )
    {
      passed = false;
      detail = what;
    }
  }
};

std::uint64_t distance( std::uint64_t a, std::uint64_t b ) { return a > b ? a - b : b - a; }

outcome ac1_projection_tables()
{
  int const tables[4][3][3] = { { { 1, 0, 0 }, { 0, 1, 0 }, { 0, 0, 1 } },
                                { { 2, 0, 0 }, { 0, 2, 0 }, { 0, 0, 2 } },
                                { { 0, 1, 1 }, { 1, 0, 1 }, { 1, 1, 0 } },
                                { { 0, 2, 2 }, { 2, 0, 2 }, { 2, 2, 0 } } };
  proj_family const families[4] = { proj_family::L, proj_family::J, proj_family::L_prime, proj_family::J_prime };
  outcome o;
  std::size_t checks = 0;
  for ( int f = 0; f < 4; ++f )
    for ( int a = 0; a < 3; ++a )
      for ( int i = 0; i < 3; ++i, ++checks )
        o.require( proj( families[f], trit( i ), trit( a ) ) == trit( tables[f][a][i] ),
                   std::string( family_name( families[f] ) ) + std::to_string( i ) + "(" + std::to_string( a ) + ")" );
  o.require( checks == 36, "check count" );
  if ( o.passed )
    o.detail = "36/36 entries";
  return o;
}

outcome ac2_algebraic_laws()
{
  outcome o;
  std::size_t cases = 0;
  for ( auto a : all_trits )
    for ( auto b : all_trits )
    {
      o.require( t_and( a, b ) == t_and( b, a ), "AND commutes" );
      o.require( t_or( a, b ) == t_or( b, a ), "OR commutes" );
      o.require( gf3_add( a, b ) == gf3_add( b, a ), "GF(3) + commutes" );
      o.require( gf3_mul( a, b ) == gf3_mul( b, a ), "GF(3) * commutes" );
      for ( auto c : all_trits )
      {
        ++cases;
        o.require( t_and( a, t_and( b, c ) ) == t_and( t_and( a, b ), c ), "AND associates" );
        o.require( t_or( a, t_or( b, c ) ) == t_or( t_or( a, b ), c ), "OR associates" );
        o.require( t_and( a, t_or( b, c ) ) == t_or( t_and( a, b ), t_and( a, c ) ), "AND over OR" );
        o.require( t_or( a, t_and( b, c ) ) == t_and( t_or( a, b ), t_or( a, c ) ), "OR over AND" );
        o.require( gf3_add( a, gf3_add( b, c ) ) == gf3_add( gf3_add( a, b ), c ), "GF(3) + associates" );
        o.require( gf3_mul( a, gf3_mul( b, c ) ) == gf3_mul( gf3_mul( a, b ), c ), "GF(3) * associates" );
        o.require( gf3_mul( a, gf3_add( b, c ) ) == gf3_add( gf3_mul( a, b ), gf3_mul( a, c ) ), "GF(3) distributes" );
      }
    }
  if ( o.passed )
    o.detail = std::to_string( cases ) + " assignments per three-variable law";
  return o;
}

expr two_var( std::vector<std::vector<factor>> terms )
{
  expr e( { "a", "b" } );
  for ( auto& t : terms )
    e.add_term( make_term( std::move( t ) ) );
  return e;
}

/* C2NOT(a, b, t) simulated on a fresh target initialized to `init` */
trit c2not_on( trit a, trit b, trit init, int applications )
{
  netlist n;
  auto const wa = n.add_input( "a" ), wb = n.add_input( "b" );
  auto const t = n.add_ancilla( init );
  for ( int k = 0; k < applications; ++k )
    n.add_gate( c2not_gate{ wa, wb, t, k > 0 } );
  n.set_output( "t", t );
  return simulate( n, std::vector<trit>{ a, b } ).outputs[0].second;
}

outcome ac3_rules()
{
  outcome o;
  auto const catalog = testing::factor_catalog( 2 );
  auto const c = []( int v ) { return make_const( trit( v ) ); };
  std::array<std::size_t, 11> instances{};

  auto check = [&]( expr const& e, int rule ) {
    auto const out = try_rule( e, rule );
    o.require( out.has_value(), "rule " + std::to_string( rule ) + " did not fire on " + to_string( e ) );
    if ( !out )
      return;
    o.require( bool( expr_equiv( out->result, to_function( e ) ) ), "rule " + std::to_string( rule ) + " unsound on " + to_string( e ) );
    ++instances[static_cast<std::size_t>( rule )];
  };

  for ( auto const& g : catalog )
  {
    for ( auto const& f : catalog )
    {
      check( two_var( { { f, c( 0 ) }, { g } } ), 1 );
      check( two_var( { { f, c( 2 ) }, { g } } ), 2 );
      check( two_var( { { f, f }, { g } } ), 9 );
    }
    check( two_var( { { c( 0 ) }, { g } } ), 3 );
    for ( int v = 1; v <= 2; ++v )
      if ( factor_max( g ) <= trit( v ) && g != c( v ) )
        check( two_var( { { g }, { c( v ) } } ), 4 );
    for ( auto fam : all_proj_families )
      for ( auto i : all_trits )
        for ( var_index a = 0; a < 2; ++a )
        {
          auto const p = make_proj( fam, i, a );
          auto const complement = make_proj( is_primed( fam ) ? unprimed( fam ) : primed( fam ), i, a );
          if ( !is_primed( fam ) )
            check( two_var( { { p, complement, g } } ), 5 );
          check( two_var( { { p, g }, { complement, g } } ), 6 );
        }
    for ( auto fam : { proj_family::L, proj_family::J } )
    {
      for ( auto i : all_trits )
      {
        check( two_var( { { make_proj( fam, level_plus( i, 1 ), 0 ), g }, { make_proj( fam, level_plus( i, 2 ), 0 ), g } } ), 7 );
        check( two_var( { { make_proj( fam, i, 0 ), make_proj( fam, i, 1 ), g } } ), 10 );
      }
      check( two_var( { { make_proj( fam, trit( 1 ), 0 ), make_proj( fam, trit( 2 ), 1 ), g },
                        { make_proj( fam, trit( 2 ), 0 ), make_proj( fam, trit( 1 ), 1 ), g } } ),
             8 );
    }
  }
  for ( int r = 1; r <= 10; ++r )
    o.require( instances[static_cast<std::size_t>( r )] > 0, "no instance of rule " + std::to_string( r ) );

  /* rule 8 against the gate itself */
  bool printed_j_reading_holds = true;
  for ( auto a : all_trits )
    for ( auto b : all_trits )
    {
      std::vector<trit> x{ a, b };
      auto const l_side = t_or( t_and( proj( proj_family::L, trit( 1 ), a ), proj( proj_family::L, trit( 2 ), b ) ),
                                t_and( proj( proj_family::L, trit( 2 ), a ), proj( proj_family::L, trit( 1 ), b ) ) );
      auto const j_side = t_or( t_and( proj( proj_family::J, trit( 1 ), a ), proj( proj_family::J, trit( 2 ), b ) ),
                                t_and( proj( proj_family::J, trit( 2 ), a ), proj( proj_family::J, trit( 1 ), b ) ) );
      o.require( l_side == c2not_on( a, b, trit( 0 ), 1 ), "rule 8 L-case differs from C2NOT on a 0 target" );
      o.require( l_side == eval_factor( make_pair( proj_family::L, 0, 1 ), x ), "PairL semantics" );
      o.require( j_side == c2not_on( a, b, trit( 0 ), 2 ), "rule 8 J-case differs from two C2NOTs on a 0 target" );
      o.require( j_side == eval_factor( make_pair( proj_family::J, 0, 1 ), x ), "PairJ semantics" );
      printed_j_reading_holds = printed_j_reading_holds && j_side == c2not_on( a, b, trit( 1 ), 1 );
    }
  o.require( !printed_j_reading_holds, "target-1 reading of the J-case was expected to fail" );

  if ( o.passed )
  {
    std::size_t total = 0;
    for ( auto n : instances )
      total += n;
    o.detail = std::to_string( total ) + " rule instances; J-case uses the 0-off-set Pair(J), target-1 reading refuted";
  }
  return o;
}

outcome ac4_functional()
{
  outcome o;
  std::size_t rows = 0;
  for ( auto const& name : builtin_names() )
  {
    auto const f = builtin( name );
    for ( auto strategy : { combine_strategy::explicit_max, combine_strategy::shared_accumulator } )
    {
      synth_options opts;
      opts.combine = strategy;
      opts.verify = false;
      auto const r = synth_builtin( name, opts );
      auto const check = exhaustive_check( r.circuit, f );
      std::string what = name + " (" + std::string( combine_name( strategy ) ) + ")";
      if ( check.counterexample )
        what += " fails at " + format_input( check.counterexample->input );
      o.require( check.passed, what );
      rows += pow3( f.arity() );
    }
  }
  if ( o.passed )
    o.detail = std::to_string( builtin_names().size() ) + " builtins, both strategies, " + std::to_string( rows ) + " input rows";
  return o;
}

outcome ac5_certified_costs()
{
  outcome o;
  for ( std::size_t n = 2; n <= 7; ++n )
  {
    auto const s = synth_sum_n( n );
    o.require( distance( s.cost, 4 * ( n - 1 ) ) <= cost_tolerance, "sum" + std::to_string( n ) + " cost " + std::to_string( s.cost ) );
    o.require( s.reduced_ancilla <= ancilla_tolerance, "sum" + std::to_string( n ) + " ancilla" );
    auto const p = synth_prod_n( n );
    o.require( distance( p.cost, 18 * ( n - 1 ) ) <= cost_tolerance, "prod" + std::to_string( n ) + " cost " + std::to_string( p.cost ) );
    o.require( distance( p.reduced_ancilla, 3 * ( n - 1 ) ) <= ancilla_tolerance, "prod" + std::to_string( n ) + " ancilla" );
  }
  auto const m = synth_builtin( "mul2" );
  o.require( distance( m.cost, 23 ) <= cost_tolerance, "mul2 cost " + std::to_string( m.cost ) );
  o.require( distance( m.reduced_ancilla, 4 ) <= ancilla_tolerance, "mul2 ancilla " + std::to_string( m.reduced_ancilla ) );
  if ( o.passed )
    o.detail = "sum2..7, prod2..7, mul2 exact";
  return o;
}

outcome ac6_max_ancilla()
{
  outcome o;
  std::size_t certified = 0;
  std::vector<std::string> skipped;
  for ( auto const& ref : reference_table )
  {
    std::string const name( ref.circuit );
    auto const computed = max_ancilla( builtin( name ) );
    if ( !ref.max_ancilla_certified )
    {
      skipped.push_back( name + " " + std::to_string( computed ) + " vs " + std::to_string( ref.max_ancilla ) );
      continue;
    }
    ++certified;
    o.require( computed == ref.max_ancilla, name + ": " + std::to_string( computed ) + " vs " + std::to_string( ref.max_ancilla ) );
  }
  for ( auto const& [name, expect] :
        std::vector<std::pair<std::string, std::size_t>>{ { "sum2", 12 }, { "prod2", 8 }, { "mul2", 10 }, { "avg2", 12 }, { "sqsum2", 16 } } )
    o.require( max_ancilla( builtin( name ) ) == expect, name + " two-variable row" );
  if ( o.passed )
  {
    o.detail = std::to_string( certified ) + " rows certified; not certified:";
    for ( auto const& s : skipped )
      o.detail += " " + s;
  }
  return o;
}

outcome ac7_worked_example()
{
  outcome o;
  auto const e = simplify( minterm_extract( builtin( "g_example" ).output( 0 ) ) ).result;
  std::size_t l_pairs = 0, j_pairs = 0, fused_l1 = 0, fused_j2 = 0, pair_l = 0, other = 0;
  for ( auto const& t : e.terms() )
  {
    if ( t.factors.size() == 2 && std::holds_alternative<proj_factor>( t.factors[0] ) && std::holds_alternative<proj_factor>( t.factors[1] ) )
    {
      auto const fam = std::get<proj_factor>( t.factors[0] ).family;
      ( fam == proj_family::L ? l_pairs : fam == proj_family::J ? j_pairs : other )++;
    }
    else if ( t.factors.size() == 1 && std::holds_alternative<fused_factor>( t.factors[0] ) )
    {
      auto const& u = std::get<fused_factor>( t.factors[0] );
      if ( u.family == proj_family::L && u.level == trit( 1 ) )
        ++fused_l1;
      else if ( u.family == proj_family::J && u.level == trit( 2 ) )
        ++fused_j2;
      else
        ++other;
    }
    else if ( t.factors.size() == 1 && std::holds_alternative<pair_factor>( t.factors[0] ) &&
              std::get<pair_factor>( t.factors[0] ).family == proj_family::L )
      ++pair_l;
    else
      ++other;
  }
  o.require( l_pairs == 2 && j_pairs == 2 && fused_l1 == 1 && fused_j2 == 1 && pair_l == 1 && other == 0,
             "term multiset: " + to_string( e ) );

  auto const r = synth_builtin( "g_example" );
  std::string column;
  for_each_input( 2, [&]( std::size_t, std::vector<trit> const& x ) { column += simulate( r.circuit, x ).outputs[0].second.to_char(); } );
  o.require( column == "012111212", "circuit column " + column );
  if ( o.passed )
    o.detail = to_string( e ) + "; column " + column;
  return o;
}

outcome ac8_non_certified_rows()
{
  outcome o;
  std::ostringstream notes;
  for ( auto const& name : { "avg2", "avg3", "sqsum2", "sqsum3", "mul3", "thadd", "tfadd" } )
  {
    auto const row = bench_one( name );
    o.require( row.reference.has_value(), std::string( name ) + " has no reference row" );
    o.require( row.verified, std::string( name ) + " not verified" );
    o.require( row.reference_match == match::not_certified, std::string( name ) + " claims a certified match" );
    auto const j = to_json( { row } );
    auto const& jr = j["rows"][0];
    o.require( jr.contains( "reference" ) && jr["reference"].contains( "cost" ), std::string( name ) + " JSON omits the reference cost" );
    o.require( jr["cost"] == row.cost, std::string( name ) + " JSON cost" );
    if ( row.reference )
      notes << " " << name << " " << row.cost << "/" << row.reference->cost;
  }
  if ( o.passed )
    o.detail = "computed/printed cost:" + notes.str();
  return o;
}

outcome ac9_rewrite_safety()
{
  outcome o;
  testing::expr_generator gen( 7 );
  std::size_t steps = 0, n = 0;
  for ( ; n < min_random_expressions + 500; ++n )
  {
    auto const e = gen( 1 + n % max_random_arity );
    auto const r = simplify( e );
    steps += r.trace.steps.size();
    o.require( bool( expr_equiv( r.result, to_function( e ) ) ), "not equivalent: " + to_string( e ) );
    o.require( r.trace.steps.size() <= e.terms().size() + e.num_factors(), "step bound exceeded: " + to_string( e ) );
  }
  o.require( n >= min_random_expressions, "too few expressions" );
  if ( o.passed )
    o.detail = std::to_string( n ) + " expressions, " + std::to_string( steps ) + " rewrite steps";
  return o;
}

std::optional<std::string> capture( std::string const& command )
{
  std::unique_ptr<FILE, int ( * )( FILE* )> pipe( popen( command.c_str(), "r" ), pclose );
  if ( !pipe )
    return std::nullopt;
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ( ( got = std::fread( buf.data(), 1, buf.size(), pipe.get() ) ) > 0 )
    out.append( buf.data(), got );
  if ( pclose( pipe.release() ) != 0 )
    return std::nullopt;
  return out;
}

outcome ac10_determinism( char const* tqsynth )
{
  outcome o;
  auto const a = to_json( run_benchmarks() ).dump( 2 ) + "\n";
  auto const b = to_json( run_benchmarks() ).dump( 2 ) + "\n";
  o.require( a == b, "in-process bench JSON differs between runs" );
  if ( !tqsynth )
  {
    o.require( false, "no tqsynth path given" );
    return o;
  }
  std::string const cmd = std::string( "\"" ) + tqsynth + "\" bench --json";
  auto const r1 = capture( cmd ), r2 = capture( cmd );
  o.require( r1 && r2, "tqsynth bench --json failed" );
  if ( r1 && r2 )
  {
    o.require( *r1 == *r2, "two tqsynth runs differ" );
    o.require( *r1 == a, "tqsynth output differs from in-process JSON" );
  }
  if ( o.passed )
    o.detail = std::to_string( r1->size() ) + " bytes identical across runs";
  return o;
}

} // namespace

int main( int argc, char** argv )
{
  char const* tqsynth = argc > 1 ? argv[1] : nullptr;
  std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
      { "projection tables", ac1_projection_tables },
      { "algebraic laws", ac2_algebraic_laws },
      { "rewrite rules as exhaustive identities", ac3_rules },
      { "functional correctness of every builtin", ac4_functional },
      { "certified cost and ancilla rows", ac5_certified_costs },
      { "max-ancilla column", ac6_max_ancilla },
      { "worked example", ac7_worked_example },
      { "non-certified rows reported and verified", ac8_non_certified_rows },
      { "rewrite engine safety", ac9_rewrite_safety },
      { "determinism of bench --json", [&] { return ac10_determinism( tqsynth ); } },
  };

  int failures = 0;
  for ( std::size_t k = 0; k < criteria.size(); ++k )
  {
    outcome o;
    try
    {
      o = criteria[k].second();
    }
    catch ( std::exception const& e )
    {
      o.passed = false;
      o.detail = std::string( "exception: " ) + e.what();
    }
    failures += !o.passed;
    std::cout << ( o.passed ? "[PASS] " : "[FAIL] " ) << "AC" << ( k + 1 ) << " " << criteria[k].first << ": " << o.detail << std::endl;
  }
  std::cout << ( criteria.size() - failures ) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
