/*!
  \file simplify.hpp
  \brief Fixpoint rewriting with the ten projection simplification rules

  Rules (F is L or J, c_F is 1 for L and 2 for J, R is a shared co-factor):

    1  F_i(a) * 0 * R        -> term removed
    2  c * R                 -> R            (c = 2, or c = 1 beside a {0,1}-valued factor)
    3  0                     -> term removed
    4  c_F + (F-valued terms) -> c_F
    5  F_i(a) F'_i(a) R      -> term removed
    6  F_i(a) R + F'_i(a) R  -> c_F * R
    7  F_{i+1}(a) R + F_{i+2}(a) R -> F'_i(a) R
    8  F_1(a) F_2(b) R + F_2(a) F_1(b) R -> PairF(a,b) R
    9  X X R                 -> X R
   10  F_i(a1) ... F_i(an)   -> F_i(a1,...,an)

  Every rewrite is checked against the truth table of the expression being
  simplified; a rule that changed the function is an internal error.
*/

#pragma once

#include "error.hpp"
#include "expr.hpp"
#include "trit.hpp"
#include "truth_table.hpp"

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tqs
{

struct rewrite_step
{
  int rule;
  std::string site;
  std::string before;
  std::string after;

  friend bool operator==( rewrite_step const&, rewrite_step const& ) = default;
};

struct rewrite_trace
{
  std::vector<rewrite_step> steps;

  [[nodiscard]] std::string to_string() const
  {
    std::ostringstream os;
    for ( std::size_t i = 0; i < steps.size(); ++i )
    {
      auto const& s = steps[i];
      os << "step " << ( i + 1 ) << ": rule " << s.rule << " at " << s.site << ": " << s.before << "  =>  " << s.after << '\n';
    }
    return os.str();
  }
};

struct rewrite_outcome
{
  expr result;
  rewrite_step step;
};

namespace detail
{

inline bool base_family( proj_family f ) { return f == proj_family::L || f == proj_family::J; }

inline term without( term const& t, std::initializer_list<std::size_t> drop )
{
  term r;
  for ( std::size_t k = 0; k < t.factors.size(); ++k )
  {
    if ( std::find( drop.begin(), drop.end(), k ) == drop.end() )
    {
      r.factors.push_back( t.factors[k] );
    }
  }
  return r;
}

inline term with( term t, std::initializer_list<factor> add )
{
  for ( auto const& f : add )
  {
    t.factors.push_back( f );
  }
  t.normalize();
  return t;
}

inline std::string render_terms( expr const& e, std::vector<term> const& ts )
{
  if ( ts.empty() )
  {
    return "(nothing)";
  }
  std::string s;
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    s += ( i ? " + " : "" ) + to_string( ts[i], e.vars() );
  }
  return s;
}

inline std::string term_site( std::size_t i ) { return "term " + std::to_string( i + 1 ); }
inline std::string terms_site( std::size_t i, std::size_t j )
{
  return "terms " + std::to_string( i + 1 ) + "," + std::to_string( j + 1 );
}

/* replaces term i by `replacement` (or removes it) */
inline rewrite_outcome replace_one( expr const& e, int rule, std::size_t i, std::optional<term> replacement )
{
  expr r = e;
  auto& ts = r.mutable_terms();
  rewrite_step step{ rule, term_site( i ), to_string( ts[i], e.vars() ), replacement ? to_string( *replacement, e.vars() ) : "(removed)" };
  if ( replacement )
  {
    ts[i] = std::move( *replacement );
  }
  else
  {
    ts.erase( ts.begin() + static_cast<std::ptrdiff_t>( i ) );
  }
  return { std::move( r ), std::move( step ) };
}

/* merges terms i < j into one term at position i */
inline rewrite_outcome merge_two( expr const& e, int rule, std::size_t i, std::size_t j, term merged )
{
  expr r = e;
  auto& ts = r.mutable_terms();
  rewrite_step step{ rule, terms_site( i, j ), render_terms( e, { ts[i], ts[j] } ), to_string( merged, e.vars() ) };
  ts[i] = std::move( merged );
  ts.erase( ts.begin() + static_cast<std::ptrdiff_t>( j ) );
  return { std::move( r ), std::move( step ) };
}

inline std::optional<std::size_t> find_term( std::vector<term> const& ts, term const& needle, std::size_t from )
{
  for ( std::size_t j = from; j < ts.size(); ++j )
  {
    if ( ts[j] == needle )
    {
      return j;
    }
  }
  return std::nullopt;
}

inline bool is_const( factor const& f, trit v )
{
  auto const* c = std::get_if<const_factor>( &f );
  return c && c->value == v;
}

inline std::optional<rewrite_outcome> rule1( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    auto const& fs = ts[i].factors;
    if ( fs.size() >= 2 && std::any_of( fs.begin(), fs.end(), []( auto const& f ) { return is_const( f, trit( 0 ) ); } ) )
    {
      return replace_one( e, 1, i, std::nullopt );
    }
  }
  return std::nullopt;
}

inline std::optional<rewrite_outcome> rule2( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    auto const& fs = ts[i].factors;
    if ( fs.size() < 2 )
    {
      continue;
    }
    for ( std::size_t k = 0; k < fs.size(); ++k )
    {
      bool redundant = is_const( fs[k], trit( 2 ) );
      if ( is_const( fs[k], trit( 1 ) ) )
      {
        for ( std::size_t o = 0; o < fs.size() && !redundant; ++o )
        {
          redundant = o != k && factor_max( fs[o] ) <= trit( 1 );
        }
      }
      if ( redundant )
      {
        return replace_one( e, 2, i, without( ts[i], { k } ) );
      }
    }
  }
  return std::nullopt;
}

inline std::optional<rewrite_outcome> rule3( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    if ( ts[i].factors.size() == 1 && is_const( ts[i].factors[0], trit( 0 ) ) )
    {
      return replace_one( e, 3, i, std::nullopt );
    }
  }
  return std::nullopt;
}

/* a bare constant c dominates every other term bounded by c */
inline std::optional<rewrite_outcome> rule4( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    if ( ts[i].factors.size() != 1 )
    {
      continue;
    }
    auto const* c = std::get_if<const_factor>( &ts[i].factors[0] );
    if ( !c || c->value == trit( 0 ) )
    {
      continue;
    }
    std::vector<term> kept, dropped;
    for ( std::size_t j = 0; j < ts.size(); ++j )
    {
      if ( j != i && ts[j].max_value() <= c->value )
      {
        dropped.push_back( ts[j] );
      }
      else
      {
        kept.push_back( ts[j] );
      }
    }
    if ( dropped.empty() )
    {
      continue;
    }
    expr r( e.vars(), kept );
    rewrite_step step{ 4, term_site( i ), render_terms( e, dropped ) + " + " + to_string( ts[i], e.vars() ), to_string( ts[i], e.vars() ) };
    return rewrite_outcome{ std::move( r ), std::move( step ) };
  }
  return std::nullopt;
}

inline std::optional<rewrite_outcome> rule5( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    for ( auto const& f : ts[i].factors )
    {
      auto const* p = std::get_if<proj_factor>( &f );
      if ( !p || !base_family( p->family ) )
      {
        continue;
      }
      factor const complement = make_proj( primed( p->family ), p->level, p->var );
      if ( std::find( ts[i].factors.begin(), ts[i].factors.end(), complement ) != ts[i].factors.end() )
      {
        return replace_one( e, 5, i, std::nullopt );
      }
    }
  }
  return std::nullopt;
}

inline std::optional<rewrite_outcome> rule6( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    for ( std::size_t k = 0; k < ts[i].factors.size(); ++k )
    {
      auto const* p = std::get_if<proj_factor>( &ts[i].factors[k] );
      if ( !p )
      {
        continue;
      }
      auto const other = is_primed( p->family ) ? unprimed( p->family ) : primed( p->family );
      auto const rest = without( ts[i], { k } );
      if ( auto j = find_term( ts, with( rest, { make_proj( other, p->level, p->var ) } ), i + 1 ) )
      {
        return merge_two( e, 6, i, *j, with( rest, { make_const( family_value( p->family ) ) } ) );
      }
    }
  }
  return std::nullopt;
}

inline std::size_t distinct_literals( std::vector<term> const& ts )
{
  std::set<proj_factor> seen;
  for ( auto const& t : ts )
  {
    for ( auto const& f : t.factors )
    {
      if ( auto const* p = std::get_if<proj_factor>( &f ) )
      {
        seen.insert( *p );
      }
    }
  }
  return seen.size();
}

/* contraction only, and only when it does not add a distinct literal */
inline std::optional<rewrite_outcome> rule7( expr const& e )
{
  auto const& ts = e.terms();
  auto const literals = distinct_literals( ts );
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    for ( std::size_t k = 0; k < ts[i].factors.size(); ++k )
    {
      auto const* p = std::get_if<proj_factor>( &ts[i].factors[k] );
      if ( !p || !base_family( p->family ) )
      {
        continue;
      }
      auto const rest = without( ts[i], { k } );
      for ( int d = 1; d <= 2; ++d )
      {
        auto const q = level_plus( p->level, d );
        auto const j = find_term( ts, with( rest, { make_proj( p->family, q, p->var ) } ), i + 1 );
        if ( !j )
        {
          continue;
        }
        /* the missing level r satisfies {p, q} = {r+1, r+2} */
        auto const r = trit::mod3( 3 - p->level.value() - q.value() );
        auto out = merge_two( e, 7, i, *j, with( rest, { make_proj( primed( p->family ), r, p->var ) } ) );
        if ( distinct_literals( out.result.terms() ) <= literals )
        {
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<rewrite_outcome> rule8( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    auto const& fs = ts[i].factors;
    for ( std::size_t k1 = 0; k1 < fs.size(); ++k1 )
    {
      auto const* one = std::get_if<proj_factor>( &fs[k1] );
      if ( !one || !base_family( one->family ) || one->level != trit( 1 ) )
      {
        continue;
      }
      for ( std::size_t k2 = 0; k2 < fs.size(); ++k2 )
      {
        auto const* two = std::get_if<proj_factor>( &fs[k2] );
        if ( !two || two->family != one->family || two->level != trit( 2 ) || two->var == one->var )
        {
          continue;
        }
        auto const rest = without( ts[i], { k1, k2 } );
        auto const partner = with( rest, { make_proj( one->family, trit( 2 ), one->var ), make_proj( one->family, trit( 1 ), two->var ) } );
        if ( auto j = find_term( ts, partner, i + 1 ) )
        {
          return merge_two( e, 8, i, *j, with( rest, { make_pair( one->family, one->var, two->var ) } ) );
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<rewrite_outcome> rule9( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    auto const& fs = ts[i].factors;
    if ( std::adjacent_find( fs.begin(), fs.end() ) != fs.end() )
    {
      term t = ts[i];
      t.factors.erase( std::unique( t.factors.begin(), t.factors.end() ), t.factors.end() );
      return replace_one( e, 9, i, t );
    }
  }
  return std::nullopt;
}

inline std::optional<rewrite_outcome> rule10( expr const& e )
{
  auto const& ts = e.terms();
  for ( std::size_t i = 0; i < ts.size(); ++i )
  {
    auto const& fs = ts[i].factors;
    for ( auto family : { proj_family::L, proj_family::J } )
    {
      for ( auto level : all_trits )
      {
        std::vector<std::size_t> members;
        std::set<var_index> vars;
        for ( std::size_t k = 0; k < fs.size(); ++k )
        {
          if ( auto const* p = std::get_if<proj_factor>( &fs[k] ); p && p->family == family && p->level == level )
          {
            members.push_back( k );
            vars.insert( p->var );
          }
          else if ( auto const* u = std::get_if<fused_factor>( &fs[k] ); u && u->family == family && u->level == level )
          {
            members.push_back( k );
            vars.insert( u->vars.begin(), u->vars.end() );
          }
        }
        if ( members.size() < 2 || vars.size() < 2 )
        {
          continue;
        }
        term t;
        for ( std::size_t k = 0; k < fs.size(); ++k )
        {
          if ( std::find( members.begin(), members.end(), k ) == members.end() )
          {
            t.factors.push_back( fs[k] );
          }
        }
        t = with( t, { make_fused( family, level, { vars.begin(), vars.end() } ) } );
        return replace_one( e, 10, i, t );
      }
    }
  }
  return std::nullopt;
}

} // namespace detail

/*! \brief A simplification rule: identifier, short name and a first-site rewriter. */
struct rewrite_rule
{
  int id;
  std::string_view name;
  std::string_view description;
  std::optional<rewrite_outcome> ( *rewrite )( expr const& );
};

[[nodiscard]] inline std::array<rewrite_rule, 10> const& rule_table()
{
  static std::array<rewrite_rule, 10> const rules{ {
      { 1, "zero-factor", "a term with a constant-0 factor vanishes", &detail::rule1 },
      { 2, "unit-factor", "drop a constant factor that cannot lower the term", &detail::rule2 },
      { 3, "zero-term", "drop a constant-0 term from the sum", &detail::rule3 },
      { 4, "absorbing-term", "a constant term absorbs every term it bounds", &detail::rule4 },
      { 5, "complement-product", "F_i(a) F'_i(a) = 0", &detail::rule5 },
      { 6, "complement-sum", "F_i(a) + F'_i(a) = c_F", &detail::rule6 },
      { 7, "complement-contraction", "F_{i+1}(a) + F_{i+2}(a) = F'_i(a)", &detail::rule7 },
      { 8, "pair-fusion", "F_1(a)F_2(b) + F_2(a)F_1(b) = PairF(a,b)", &detail::rule8 },
      { 9, "idempotence", "X X = X", &detail::rule9 },
      { 10, "projection-fusion", "F_i(a1)..F_i(an) = F_i(a1,..,an)", &detail::rule10 },
  } };
  return rules;
}

[[nodiscard]] inline rewrite_rule const& rule_by_id( int id )
{
  if ( id < 1 || id > 10 )
  {
    throw input_error( "no simplification rule " + std::to_string( id ) );
  }
  return rule_table()[static_cast<std::size_t>( id - 1 )];
}

/* constant cleanup, annihilation, fusion, then contraction */
inline constexpr std::array<int, 10> rule_priority{ 1, 3, 9, 5, 2, 6, 4, 8, 10, 7 };

/*! \brief Applies `rule` at its leftmost site, with the step that was taken. */
[[nodiscard]] inline std::optional<rewrite_outcome> try_rule( expr const& e, int rule )
{
  return rule_by_id( rule ).rewrite( e );
}

[[nodiscard]] inline std::optional<expr> apply_rule( expr const& e, int rule )
{
  if ( auto out = try_rule( e, rule ) )
  {
    return std::move( out->result );
  }
  return std::nullopt;
}

[[nodiscard]] inline std::optional<expr> apply_rule( expr const& e, rewrite_rule const& rule )
{
  return apply_rule( e, rule.id );
}

namespace detail
{

/* Given `before` agrees with `reference`, `after` can only differ on inputs
 * where a removed or an added term is nonzero; only those rows are checked. */
inline std::optional<std::size_t> first_changed_mismatch( expr const& before, expr const& after, ternary_function const& reference )
{
  std::vector<term> changed;
  auto missing_from = [&]( std::vector<term> const& from, std::vector<term> const& other ) {
    std::vector<bool> used( other.size(), false );
    for ( auto const& t : from )
    {
      bool found = false;
      for ( std::size_t k = 0; k < other.size() && !found; ++k )
      {
        if ( !used[k] && other[k] == t )
        {
          used[k] = found = true;
        }
      }
      if ( !found )
      {
        changed.push_back( t );
      }
    }
  };
  missing_from( before.terms(), after.terms() );
  missing_from( after.terms(), before.terms() );

  std::optional<std::size_t> bad;
  for_each_input( after.arity(), [&]( std::size_t idx, std::vector<trit> const& x ) {
    if ( bad )
      return;
    bool const touched = std::any_of( changed.begin(), changed.end(), [&]( term const& t ) { return t.eval( x ) != trit( 0 ); } );
    if ( touched && after.eval( x ) != reference.at( idx ) )
    {
      bad = idx;
    }
  } );
  return bad;
}

} // namespace detail

struct simplify_result
{
  expr result;
  rewrite_trace trace;
};

/*! \brief Rewrites to fixpoint in `rule_priority` order.
 *
 * Every rule strictly decreases (terms + factors), so the number of steps is
 * bounded by that sum for the input. Each step is checked against the input's
 * truth table on the rows it can affect, and the result is checked on all
 * rows; a mismatch throws an internal error naming the rule and the input.
 */
[[nodiscard]] inline simplify_result simplify( expr const& e )
{
  expr current = e;
  for ( auto& t : current.mutable_terms() )
  {
    t.normalize();
  }
  auto const reference = to_function( e );
  auto const bound = e.terms().size() + e.num_factors();

  rewrite_trace trace;
  while ( true )
  {
    std::optional<rewrite_outcome> out;
    for ( int id : rule_priority )
    {
      if ( ( out = try_rule( current, id ) ) )
      {
        break;
      }
    }
    if ( !out )
    {
      break;
    }
    if ( auto bad = detail::first_changed_mismatch( current, out->result, reference ) )
    {
      throw internal_error( "simplification rule " + std::to_string( out->step.rule ) + " changed the function at input " +
                            format_input( lex_input( *bad, e.arity() ) ) + " (" + out->step.before + " => " + out->step.after + ")" );
    }
    trace.steps.push_back( std::move( out->step ) );
    current = std::move( out->result );
    if ( trace.steps.size() > bound )
    {
      throw internal_error( "simplification exceeded its step bound of " + std::to_string( bound ) );
    }
  }
  if ( auto eq = expr_equiv( current, reference ); !eq )
  {
    throw internal_error( "simplified expression differs from its input at " + format_input( *eq.counterexample ) );
  }
  return { std::move( current ), std::move( trace ) };
}

/*! \brief Re-applies the rule sequence of `trace` to `e`. */
[[nodiscard]] inline expr replay( expr e, rewrite_trace const& trace )
{
  for ( auto& t : e.mutable_terms() )
  {
    t.normalize();
  }
  for ( auto const& s : trace.steps )
  {
    auto next = apply_rule( e, s.rule );
    if ( !next )
    {
      throw internal_error( "trace step with rule " + std::to_string( s.rule ) + " does not apply" );
    }
    e = std::move( *next );
  }
  return e;
}

} // namespace tqs
