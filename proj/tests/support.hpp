/*!
  \file support.hpp
  \brief Random expression generator shared by the simplifier tests
*/

#pragma once

#include <tqs/expr.hpp>
#include <tqs/simplify.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace tqs::testing
{

/* every factor over `arity` variables, constants included */
inline std::vector<factor> factor_catalog( std::size_t arity )
{
  std::vector<factor> out;
  for ( var_index v = 0; v < arity; ++v )
  {
    for ( auto f : all_proj_families )
      for ( auto i : all_trits )
        out.push_back( make_proj( f, i, v ) );
  }
  for ( var_index a = 0; a < arity; ++a )
  {
    for ( var_index b = a + 1; b < arity; ++b )
    {
      for ( auto f : { proj_family::L, proj_family::J } )
      {
        out.push_back( make_pair( f, a, b ) );
        for ( auto i : all_trits )
          out.push_back( make_fused( f, i, { a, b } ) );
      }
    }
  }
  for ( auto c : all_trits )
  {
    out.push_back( make_const( c ) );
  }
  return out;
}

/*! \brief Random sums of products, biased towards rule-shaped term pairs.
 *
 * After a base term is drawn, a sibling is sometimes added that differs in
 * one projection: its complement, the same literal at another level, or the
 * level-swapped L1/L2 partner. Those are the shapes rules 6, 7 and 8 look for.
 */
class expr_generator
{
public:
  explicit expr_generator( std::uint32_t seed ) : _rng( seed ) {}

  expr operator()( std::size_t arity )
  {
    std::vector<term> ts;
    auto const n = pick( 1, 6 );
    for ( std::size_t i = 0; i < n; ++i )
    {
      auto t = random_term( arity );
      ts.push_back( t );
      if ( chance( 40 ) )
      {
        if ( auto s = sibling( t ) )
          ts.push_back( *s );
      }
    }
    std::shuffle( ts.begin(), ts.end(), _rng );
    return expr( default_var_names( arity ), ts );
  }

private:
  std::size_t pick( std::size_t lo, std::size_t hi ) { return std::uniform_int_distribution<std::size_t>( lo, hi )( _rng ); }
  bool chance( int percent ) { return std::uniform_int_distribution<int>( 0, 99 )( _rng ) < percent; }
  trit any_trit() { return trit( static_cast<int>( pick( 0, 2 ) ) ); }

  factor random_factor( std::size_t arity )
  {
    auto const roll = pick( 0, 99 );
    auto const family = all_proj_families[pick( 0, 3 )];
    auto const base = pick( 0, 1 ) ? proj_family::L : proj_family::J;
    if ( arity >= 2 && roll < 10 )
    {
      auto const a = static_cast<var_index>( pick( 0, arity - 1 ) );
      auto const b = static_cast<var_index>( ( a + pick( 1, arity - 1 ) ) % arity );
      return make_pair( base, a, b );
    }
    if ( arity >= 2 && roll < 20 )
    {
      std::vector<var_index> vs;
      for ( var_index v = 0; v < arity; ++v )
        if ( chance( 60 ) )
          vs.push_back( v );
      while ( vs.size() < 2 )
      {
        auto const v = static_cast<var_index>( pick( 0, arity - 1 ) );
        if ( std::find( vs.begin(), vs.end(), v ) == vs.end() )
          vs.push_back( v );
      }
      return make_fused( base, any_trit(), vs );
    }
    if ( roll < 28 )
    {
      return make_const( any_trit() );
    }
    return make_proj( family, any_trit(), static_cast<var_index>( pick( 0, arity - 1 ) ) );
  }

  term random_term( std::size_t arity )
  {
    std::vector<factor> fs;
    auto const n = pick( 1, 3 );
    for ( std::size_t i = 0; i < n; ++i )
      fs.push_back( random_factor( arity ) );
    return make_term( fs );
  }

  std::optional<term> sibling( term const& t )
  {
    std::vector<std::size_t> projs;
    for ( std::size_t k = 0; k < t.factors.size(); ++k )
      if ( std::holds_alternative<proj_factor>( t.factors[k] ) )
        projs.push_back( k );
    if ( projs.empty() )
      return std::nullopt;
    term s = t;
    auto const k = projs[pick( 0, projs.size() - 1 )];
    auto const p = std::get<proj_factor>( s.factors[k] );
    switch ( pick( 0, 2 ) )
    {
    case 0:
      s.factors[k] = make_proj( is_primed( p.family ) ? unprimed( p.family ) : primed( p.family ), p.level, p.var );
      break;
    case 1:
      s.factors[k] = make_proj( p.family, level_plus( p.level, static_cast<int>( pick( 1, 2 ) ) ), p.var );
      break;
    default:
      /* swap levels 1 and 2 between this literal and another one of its family */
      for ( auto k2 : projs )
      {
        auto const q = std::get<proj_factor>( s.factors[k2] );
        if ( k2 != k && q.family == p.family && q.var != p.var )
        {
          s.factors[k] = make_proj( p.family, q.level, p.var );
          s.factors[k2] = make_proj( q.family, p.level, q.var );
          break;
        }
      }
    }
    s.normalize();
    return s;
  }

  std::mt19937 _rng;
};

} // namespace tqs::testing
