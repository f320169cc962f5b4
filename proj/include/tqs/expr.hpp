/*!
  \file expr.hpp
  \brief Sum-of-products IR over projection literals

  A term is a ternary AND (min) of factors, an expression a ternary OR (max)
  of terms. Besides plain projection literals the IR carries the two fused
  forms produced by the simplifier: multi-variable projections and the
  symmetric {1,2} pair.
*/

#pragma once

#include "error.hpp"
#include "trit.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tqs
{

using var_index = std::uint32_t;

/*! \brief Single-variable literal `family_level(var)`, any of L, J, L', J'. */
struct proj_factor
{
  proj_family family;
  trit level;
  var_index var;

  friend bool operator==( proj_factor const&, proj_factor const& ) = default;
  friend auto operator<=>( proj_factor const&, proj_factor const& ) = default;
};

/*! \brief `F_level(v1, ..., vk)`: fires iff every listed variable equals level (F is L or J). */
struct fused_factor
{
  proj_family family;
  trit level;
  std::vector<var_index> vars; /* sorted, distinct, size >= 2 */

  friend bool operator==( fused_factor const&, fused_factor const& ) = default;
  friend auto operator<=>( fused_factor const&, fused_factor const& ) = default;
};

/*! \brief Fires iff the values of a and b are {1,2} in either order (F is L or J). */
struct pair_factor
{
  proj_family family;
  var_index a; /* a < b */
  var_index b;

  friend bool operator==( pair_factor const&, pair_factor const& ) = default;
  friend auto operator<=>( pair_factor const&, pair_factor const& ) = default;
};

struct const_factor
{
  trit value;

  friend bool operator==( const_factor const&, const_factor const& ) = default;
  friend auto operator<=>( const_factor const&, const_factor const& ) = default;
};

using factor = std::variant<proj_factor, fused_factor, pair_factor, const_factor>;

[[nodiscard]] inline factor make_proj( proj_family family, trit level, var_index var )
{
  return proj_factor{ family, level, var };
}

[[nodiscard]] inline factor make_fused( proj_family family, trit level, std::vector<var_index> vars )
{
  if ( is_primed( family ) )
  {
    throw input_error( "fused projections are only defined for L and J" );
  }
  std::sort( vars.begin(), vars.end() );
  if ( std::adjacent_find( vars.begin(), vars.end() ) != vars.end() || vars.size() < 2 )
  {
    throw input_error( "fused projection needs at least two distinct variables" );
  }
  return fused_factor{ family, level, std::move( vars ) };
}

[[nodiscard]] inline factor make_pair( proj_family family, var_index a, var_index b )
{
  if ( is_primed( family ) )
  {
    throw input_error( "pair factors are only defined for L and J" );
  }
  if ( a == b )
  {
    throw input_error( "pair factor needs two distinct variables" );
  }
  return pair_factor{ family, std::min( a, b ), std::max( a, b ) };
}

[[nodiscard]] inline factor make_const( trit value ) { return const_factor{ value }; }

[[nodiscard]] inline trit eval_factor( factor const& f, std::span<trit const> x )
{
  return std::visit(
      [&]( auto const& v ) -> trit {
        using T = std::decay_t<decltype( v )>;
        if constexpr ( std::is_same_v<T, proj_factor> )
        {
          return proj( v.family, v.level, x[v.var] );
        }
        else if constexpr ( std::is_same_v<T, fused_factor> )
        {
          bool const all = std::all_of( v.vars.begin(), v.vars.end(), [&]( auto i ) { return x[i] == v.level; } );
          return all ? family_value( v.family ) : trit( 0 );
        }
        else if constexpr ( std::is_same_v<T, pair_factor> )
        {
          auto const p = x[v.a].value(), q = x[v.b].value();
          return ( p * q == 2 ) ? family_value( v.family ) : trit( 0 );
        }
        else
        {
          return v.value;
        }
      },
      f );
}

/*! \brief Largest value the factor can take. */
[[nodiscard]] inline trit factor_max( factor const& f )
{
  if ( auto const* c = std::get_if<const_factor>( &f ) )
  {
    return c->value;
  }
  return std::visit(
      []( auto const& v ) -> trit {
        if constexpr ( requires { v.family; } )
        {
          return family_value( v.family );
        }
        else
        {
          return trit( 0 );
        }
      },
      f );
}

/* variables a factor reads, ascending */
[[nodiscard]] inline std::vector<var_index> factor_vars( factor const& f )
{
  return std::visit(
      []( auto const& v ) -> std::vector<var_index> {
        using T = std::decay_t<decltype( v )>;
        if constexpr ( std::is_same_v<T, proj_factor> )
          return { v.var };
        else if constexpr ( std::is_same_v<T, fused_factor> )
          return v.vars;
        else if constexpr ( std::is_same_v<T, pair_factor> )
          return { v.a, v.b };
        else
          return {};
      },
      f );
}

/*! \brief Canonical factor order: by first variable, then kind, family and level. */
[[nodiscard]] inline bool factor_less( factor const& x, factor const& y )
{
  auto key = []( factor const& f ) {
    auto vs = factor_vars( f );
    /* constants sort last */
    auto const first = vs.empty() ? std::numeric_limits<var_index>::max() : vs.front();
    return std::pair{ first, f.index() };
  };
  auto const kx = key( x ), ky = key( y );
  if ( kx != ky )
  {
    return kx < ky;
  }
  return x < y;
}

struct term
{
  std::vector<factor> factors;

  void normalize() { std::stable_sort( factors.begin(), factors.end(), factor_less ); }

  [[nodiscard]] trit eval( std::span<trit const> x ) const
  {
    trit v( 2 );
    for ( auto const& f : factors )
    {
      v = t_and( v, eval_factor( f, x ) );
      if ( v == trit( 0 ) )
      {
        break;
      }
    }
    return v;
  }

  /* upper bound of the term's value */
  [[nodiscard]] trit max_value() const
  {
    trit v( 2 );
    for ( auto const& f : factors )
    {
      v = t_and( v, factor_max( f ) );
    }
    return v;
  }

  friend bool operator==( term const&, term const& ) = default;
};

[[nodiscard]] inline term make_term( std::vector<factor> factors )
{
  term t{ std::move( factors ) };
  t.normalize();
  return t;
}

/*! \brief A sum of products over a fixed list of variables; no terms means constant 0. */
class expr
{
public:
  explicit expr( std::vector<std::string> vars, std::vector<term> terms = {} )
      : _vars( std::move( vars ) ), _terms( std::move( terms ) )
  {
    for ( auto const& t : _terms )
    {
      check_term( t );
    }
  }

  [[nodiscard]] std::vector<std::string> const& vars() const noexcept { return _vars; }
  [[nodiscard]] std::size_t arity() const noexcept { return _vars.size(); }
  [[nodiscard]] std::vector<term> const& terms() const noexcept { return _terms; }
  [[nodiscard]] bool empty() const noexcept { return _terms.empty(); }

  void add_term( term t )
  {
    check_term( t );
    _terms.push_back( std::move( t ) );
  }

  /* used by the rewrite engine, which keeps terms normalized itself */
  std::vector<term>& mutable_terms() noexcept { return _terms; }

  [[nodiscard]] trit eval( std::span<trit const> x ) const
  {
    if ( x.size() != arity() )
    {
      throw input_error( "expression takes " + std::to_string( arity() ) + " inputs, got " + std::to_string( x.size() ) );
    }
    trit v( 0 );
    for ( auto const& t : _terms )
    {
      v = t_or( v, t.eval( x ) );
      if ( v == trit( 2 ) )
      {
        break;
      }
    }
    return v;
  }

  [[nodiscard]] std::size_t num_factors() const noexcept
  {
    std::size_t n = 0;
    for ( auto const& t : _terms )
    {
      n += t.factors.size();
    }
    return n;
  }

  friend bool operator==( expr const&, expr const& ) = default;

private:
  void check_term( term const& t ) const
  {
    if ( t.factors.empty() )
    {
      throw input_error( "terms must have at least one factor" );
    }
    for ( auto const& f : t.factors )
    {
      for ( auto v : factor_vars( f ) )
      {
        if ( v >= _vars.size() )
        {
          throw input_error( "factor refers to variable index " + std::to_string( v ) + " of a " +
                             std::to_string( _vars.size() ) + "-variable expression" );
        }
      }
    }
  }

  std::vector<std::string> _vars;
  std::vector<term> _terms;
};

[[nodiscard]] inline trit eval_expr( expr const& e, std::span<trit const> x ) { return e.eval( x ); }

/*! \brief Tabulates an expression. */
[[nodiscard]] inline ternary_function to_function( expr const& e, std::string name = "expr" )
{
  std::vector<trit> out( pow3( e.arity() ) );
  for_each_input( e.arity(), [&]( std::size_t idx, std::vector<trit> const& x ) { out[idx] = e.eval( x ); } );
  return ternary_function( std::move( name ), e.vars(), std::move( out ) );
}

/*! \brief Minterm expansion.
 *
 * Every row with f = 1 contributes the product of L_{x_j}(var_j), then every
 * row with f = 2 the product of J_{x_j}(var_j), both in lexicographic row
 * order. Zero rows contribute nothing.
 */
[[nodiscard]] inline expr minterm_extract( ternary_function const& f )
{
  expr e( f.vars() );
  for ( auto const& [value, family] : { std::pair{ trit( 1 ), proj_family::L }, std::pair{ trit( 2 ), proj_family::J } } )
  {
    for_each_input( f.arity(), [&]( std::size_t idx, std::vector<trit> const& x ) {
      if ( f.at( idx ) != value )
      {
        return;
      }
      std::vector<factor> fs;
      for ( std::size_t j = 0; j < x.size(); ++j )
      {
        fs.push_back( make_proj( family, x[j], static_cast<var_index>( j ) ) );
      }
      e.add_term( make_term( std::move( fs ) ) );
    } );
  }
  return e;
}

struct equivalence_result
{
  bool equivalent{ true };
  std::optional<std::vector<trit>> counterexample; /* lexicographically smallest */

  explicit operator bool() const noexcept { return equivalent; }
};

/*! \brief Exhaustive comparison of `e` against `f` on all 3^m inputs. */
[[nodiscard]] inline equivalence_result expr_equiv( expr const& e, ternary_function const& f )
{
  if ( e.arity() != f.arity() )
  {
    throw input_error( "arity mismatch: expression has " + std::to_string( e.arity() ) + " variables, table has " +
                       std::to_string( f.arity() ) );
  }
  equivalence_result r;
  for_each_input( f.arity(), [&]( std::size_t idx, std::vector<trit> const& x ) {
    if ( r.equivalent && e.eval( x ) != f.at( idx ) )
    {
      r.equivalent = false;
      r.counterexample = x;
    }
  } );
  return r;
}

/* ---------------------------------------------------------------------------
 * Rendering: L1(a)L2(b) + J2(a,b) + PairL(a,b)
 * ------------------------------------------------------------------------- */

[[nodiscard]] inline std::string to_string( factor const& f, std::vector<std::string> const& vars )
{
  auto join = [&]( std::vector<var_index> const& vs ) {
    std::string s;
    for ( std::size_t i = 0; i < vs.size(); ++i )
    {
      s += ( i ? "," : "" ) + vars.at( vs[i] );
    }
    return s;
  };
  return std::visit(
      [&]( auto const& v ) -> std::string {
        using T = std::decay_t<decltype( v )>;
        if constexpr ( std::is_same_v<T, proj_factor> )
          return std::string( family_name( v.family ) ) + v.level.to_char() + "(" + vars.at( v.var ) + ")";
        else if constexpr ( std::is_same_v<T, fused_factor> )
          return std::string( family_name( v.family ) ) + v.level.to_char() + "(" + join( v.vars ) + ")";
        else if constexpr ( std::is_same_v<T, pair_factor> )
          return "Pair" + std::string( family_name( v.family ) ) + "(" + vars.at( v.a ) + "," + vars.at( v.b ) + ")";
        else
          return std::string( 1, v.value.to_char() );
      },
      f );
}

/* constants are separated from their neighbours by '*' (L1(a)*1) */
[[nodiscard]] inline std::string to_string( term const& t, std::vector<std::string> const& vars )
{
  std::string s;
  for ( std::size_t i = 0; i < t.factors.size(); ++i )
  {
    if ( i != 0 && ( std::holds_alternative<const_factor>( t.factors[i] ) || std::holds_alternative<const_factor>( t.factors[i - 1] ) ) )
    {
      s += "*";
    }
    s += to_string( t.factors[i], vars );
  }
  return s;
}

[[nodiscard]] inline std::string to_string( expr const& e )
{
  if ( e.empty() )
  {
    return "0";
  }
  std::string s;
  for ( std::size_t i = 0; i < e.terms().size(); ++i )
  {
    s += ( i ? " + " : "" ) + to_string( e.terms()[i], e.vars() );
  }
  return s;
}

} // namespace tqs
