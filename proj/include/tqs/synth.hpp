/*!
  \file synth.hpp
  \brief Truth table to verified netlist

  Non-linear outputs go through minterm extraction and simplification, and
  every factor of the simplified expression is realized on its own ancilla.
  GF(3)-affine outputs become Feynman cascades. sum_n, prod_n and mul3 have
  dedicated hierarchical builders.
*/

#pragma once

#include "error.hpp"
#include "expr.hpp"
#include "gates.hpp"
#include "sim.hpp"
#include "simplify.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tqs
{

enum class combine_strategy : std::uint8_t
{
  shared_accumulator,
  explicit_max
};

[[nodiscard]] constexpr std::string_view combine_name( combine_strategy s ) noexcept
{
  return s == combine_strategy::shared_accumulator ? "shared" : "max";
}

[[nodiscard]] inline combine_strategy parse_combine( std::string_view s )
{
  if ( s == "shared" )
    return combine_strategy::shared_accumulator;
  if ( s == "max" )
    return combine_strategy::explicit_max;
  throw input_error( "unknown combine strategy '" + std::string( s ) + "' (expected shared or max)" );
}

struct synth_options
{
  combine_strategy combine{ combine_strategy::explicit_max };
  cost_model model{ cost_model::paper() };
  bool verify{ true };
};

enum class output_route : std::uint8_t
{
  identity,           /* output is an input wire */
  constant,           /* ancilla holding a constant, no gates */
  linear,             /* Feynman cascade */
  explicit_max,       /* per-term wires joined by one MAX gate */
  shared_accumulator, /* disjoint single-factor terms written onto one ancilla */
  hierarchical        /* built from prod2 blocks or a Feynman chain */
};

[[nodiscard]] constexpr std::string_view route_name( output_route r ) noexcept
{
  constexpr std::array<std::string_view, 6> names{ "identity", "constant", "linear", "explicit-max", "shared-accumulator", "hierarchical" };
  return names[static_cast<std::size_t>( r )];
}

struct output_report
{
  std::string name;
  output_route route{ output_route::explicit_max };
  std::optional<linear_form> linear;
  std::optional<expr> minterms;
  std::optional<expr> simplified;
  rewrite_trace trace;
};

struct synth_report
{
  std::string name;
  netlist circuit;
  std::size_t max_ancilla{ 0 };
  std::size_t reduced_ancilla{ 0 };
  std::uint64_t cost{ 0 };      /* under `model` */
  std::uint64_t cost_full{ 0 }; /* same model, pair repeats charged */
  std::string model;
  std::size_t depth{ 0 };
  std::size_t gate_count{ 0 };
  std::size_t relaxed_gtg{ 0 }; /* GTG/MultiGTG gates with a repeated shift */
  bool verified{ false };
  std::vector<output_report> outputs;
  rewrite_trace trace;
};

/*! \brief Worst-case ancilla count of unsimplified minterm synthesis. */
[[nodiscard]] inline std::size_t max_ancilla( multi_output_function const& f )
{
  std::size_t total = 0;
  for ( auto const& o : f.outputs() )
  {
    total += o.nonzero_rows() * o.arity();
  }
  return total;
}

namespace detail
{

inline shift_op value_shift( trit v ) { return v == trit( 1 ) ? single_shift : dual_shift; }

inline std::size_t lvl( trit i, int k ) { return static_cast<std::size_t>( level_plus( i, k ).value() ); }

/* Realizes the factors and terms of one expression over `vars` in `n`. */
class expr_emitter
{
public:
  expr_emitter( netlist& n, std::vector<wire_id> vars, std::vector<std::string> var_names, std::string prefix )
      : _n( n ), _vars( std::move( vars ) ), _names( std::move( var_names ) ), _prefix( std::move( prefix ) )
  {
  }

  wire_id emit( expr const& e, combine_strategy strategy, output_route& route )
  {
    if ( e.empty() )
    {
      route = output_route::constant;
      return _n.add_ancilla( trit( 0 ), _prefix );
    }
    if ( strategy == combine_strategy::shared_accumulator && singles_disjoint( e ) )
    {
      route = output_route::shared_accumulator;
      return emit_shared( e );
    }
    route = output_route::explicit_max;
    return emit_max( e );
  }

private:
  std::string label( factor const& f ) const { return _prefix + ":" + to_string( f, _names ); }

  std::vector<wire_id> controls( factor const& f ) const
  {
    std::vector<wire_id> cs;
    for ( auto v : factor_vars( f ) )
    {
      cs.push_back( _vars.at( v ) );
    }
    return cs;
  }

  void add_controlled( std::vector<wire_id> const& cs, wire_id target, shift_triple const& s )
  {
    if ( cs.size() == 1 )
      _n.add_gate( gtg_gate{ cs.front(), target, s } );
    else
      _n.add_gate( multi_gtg_gate{ cs, target, s } );
  }

  /* Gates that write the factor's value onto `target`, assumed to hold 0.
   * With `quiet` every non-firing branch is Buffer. */
  void write_factor( factor const& f, wire_id target, bool quiet )
  {
    std::visit(
        [&]( auto const& v ) {
          using T = std::decay_t<decltype( v )>;
          if constexpr ( std::is_same_v<T, proj_factor> || std::is_same_v<T, fused_factor> )
          {
            auto const value = family_value( v.family );
            shift_triple s{ buffer, buffer, buffer };
            if ( !is_primed( v.family ) )
            {
              s[lvl( v.level, 0 )] = value_shift( value );
              if ( !quiet )
                s[lvl( v.level, 2 )] = self_shift;
            }
            else
            {
              s[lvl( v.level, 1 )] = value_shift( value );
              s[lvl( v.level, 2 )] = quiet ? value_shift( value ) : ( value == trit( 1 ) ? self_single_shift : self_dual_shift );
            }
            add_controlled( controls( f ), target, s );
          }
          else if constexpr ( std::is_same_v<T, pair_factor> )
          {
            auto const a = _vars.at( v.a ), b = _vars.at( v.b );
            _n.add_gate( c2not_gate{ a, b, target, false } );
            if ( v.family == proj_family::J )
              _n.add_gate( c2not_gate{ a, b, target, true } );
          }
          else
          {
            throw internal_error( "constant factors are realized as ancilla initializations" );
          }
        },
        f );
  }

  wire_id factor_wire( factor const& f )
  {
    if ( auto it = _cache.find( f ); it != _cache.end() )
    {
      return it->second;
    }
    wire_id w;
    if ( auto const* c = std::get_if<const_factor>( &f ) )
    {
      w = _n.add_ancilla( c->value, label( f ) );
    }
    else
    {
      w = _n.add_ancilla( trit( 0 ), label( f ) );
      write_factor( f, w, false );
    }
    _cache.emplace( f, w );
    return w;
  }

  /* MIN of the factor wires onto a fresh ancilla, or the single factor wire */
  wire_id term_wire( term const& t )
  {
    std::vector<wire_id> ws;
    for ( auto const& f : t.factors )
    {
      auto const w = _cache.at( f );
      if ( std::find( ws.begin(), ws.end(), w ) == ws.end() )
        ws.push_back( w );
    }
    if ( ws.size() == 1 )
    {
      return ws.front();
    }
    auto const w = _n.add_ancilla( trit( 2 ), _prefix + ":min" + std::to_string( ++_mins ) );
    _n.add_gate( min_gate{ ws, w } );
    return w;
  }

  wire_id emit_max( expr const& e )
  {
    for ( auto const& t : e.terms() )
    {
      for ( auto const& f : t.factors )
        factor_wire( f );
    }
    std::vector<wire_id> ws;
    for ( auto const& t : e.terms() )
    {
      auto const w = term_wire( t );
      if ( std::find( ws.begin(), ws.end(), w ) == ws.end() )
        ws.push_back( w );
    }
    auto const out = ws.back();
    ws.pop_back();
    if ( !ws.empty() )
    {
      _n.add_gate( max_gate{ ws, out } );
    }
    return out;
  }

  /* single-factor terms never fire together */
  bool singles_disjoint( expr const& e ) const
  {
    std::vector<term const*> singles;
    for ( auto const& t : e.terms() )
    {
      if ( t.factors.size() == 1 )
        singles.push_back( &t );
    }
    if ( singles.empty() )
    {
      return false;
    }
    bool ok = true;
    for_each_input( e.arity(), [&]( std::size_t, std::vector<trit> const& x ) {
      if ( !ok )
        return;
      auto const firing = std::count_if( singles.begin(), singles.end(), [&]( term const* t ) { return t->eval( x ) != trit( 0 ); } );
      ok = firing <= 1;
    } );
    return ok;
  }

  wire_id emit_shared( expr const& e )
  {
    trit init( 0 );
    for ( auto const& t : e.terms() )
    {
      if ( auto const* c = std::get_if<const_factor>( &t.factors.front() ); t.factors.size() == 1 && c )
        init = t_or( init, c->value );
    }
    auto const acc = _n.add_ancilla( init, _prefix + ":acc" );
    for ( auto const& t : e.terms() )
    {
      if ( t.factors.size() == 1 && !std::holds_alternative<const_factor>( t.factors.front() ) )
        write_factor( t.factors.front(), acc, true );
    }
    for ( auto const& t : e.terms() )
    {
      if ( t.factors.size() > 1 )
      {
        for ( auto const& f : t.factors )
          factor_wire( f );
      }
    }
    std::vector<wire_id> ws;
    for ( auto const& t : e.terms() )
    {
      if ( t.factors.size() > 1 )
      {
        auto const w = term_wire( t );
        if ( std::find( ws.begin(), ws.end(), w ) == ws.end() )
          ws.push_back( w );
      }
    }
    if ( !ws.empty() )
    {
      _n.add_gate( max_gate{ ws, acc } );
    }
    return acc;
  }

  netlist& _n;
  std::vector<wire_id> _vars;
  std::vector<std::string> _names;
  std::string _prefix;
  std::map<factor, wire_id> _cache;
  std::size_t _mins{ 0 };
};

inline expr simplified_expr( ternary_function const& f ) { return simplify( minterm_extract( f ) ).result; }

inline void finish( synth_report& r, multi_output_function const& f, synth_options const& opts )
{
  auto const& n = r.circuit;
  r.name = f.name();
  r.max_ancilla = max_ancilla( f );
  r.reduced_ancilla = ancilla_count( n );
  r.model = opts.model.name;
  r.cost = cost( n, opts.model );
  r.cost_full = cost( n, opts.model.without_pair_discount() );
  r.depth = depth( n );
  r.gate_count = n.gates().size();
  r.relaxed_gtg = static_cast<std::size_t>( std::count_if( n.gates().begin(), n.gates().end(), has_repeated_shifts ) );
  r.trace.steps.clear();
  for ( auto const& o : r.outputs )
  {
    r.trace.steps.insert( r.trace.steps.end(), o.trace.steps.begin(), o.trace.steps.end() );
  }
  r.verified = false;
  if ( opts.verify )
  {
    auto const check = exhaustive_check( n, f );
    if ( !check )
    {
      auto const& m = *check.counterexample;
      throw error( error_kind::verification, "circuit for " + f.name() + " fails at input " + format_input( m.input ) + ": output " +
                                                 m.output_name + " is " + m.actual.to_char() + ", expected " + m.expected.to_char() );
    }
    r.verified = true;
  }
}

inline std::vector<wire_id> add_inputs( netlist& n, std::vector<std::string> const& vars )
{
  std::vector<wire_id> ws;
  for ( auto const& v : vars )
  {
    ws.push_back( n.add_input( v ) );
  }
  return ws;
}

inline void check_chain_length( std::size_t n )
{
  if ( n < min_chain_length || n > max_chain_length )
  {
    throw input_error( "chain length must be between " + std::to_string( min_chain_length ) + " and " + std::to_string( max_chain_length ) +
                       ", got " + std::to_string( n ) );
  }
}

/* one mul2 product block on (x, y); returns its output wire */
inline wire_id prod2_block( netlist& n, expr const& product, wire_id x, wire_id y, std::size_t index )
{
  output_route route{};
  expr_emitter em( n, { x, y }, { n.wire_label( x ), n.wire_label( y ) }, "p" + std::to_string( index ) );
  return em.emit( product, combine_strategy::explicit_max, route );
}

inline output_report prod2_report( std::string name )
{
  auto const mul2 = builtin( "mul2" ).output( 0 );
  output_report o;
  o.name = std::move( name );
  o.route = output_route::hierarchical;
  o.minterms = minterm_extract( mul2 );
  auto s = simplify( *o.minterms );
  o.simplified = s.result;
  o.trace = std::move( s.trace );
  return o;
}

} // namespace detail

/*! \brief Synthesizes every output of `f` and verifies the result. */
[[nodiscard]] inline synth_report synth( multi_output_function const& f, synth_options const& opts = {} )
{
  if ( f.arity() == 0 )
  {
    throw input_error( "cannot synthesize a function of arity 0" );
  }
  synth_report r;
  auto& n = r.circuit;
  auto const in = detail::add_inputs( n, f.vars() );
  auto const k = f.num_outputs();

  std::vector<std::optional<linear_form>> lin( k );
  std::vector<wire_id> out( k );
  r.outputs.resize( k );
  for ( std::size_t i = 0; i < k; ++i )
  {
    r.outputs[i].name = f.output( i ).name();
    lin[i] = linear_detect( f.output( i ) );
  }

  /* non-linear outputs first: they only read the inputs */
  for ( std::size_t i = 0; i < k; ++i )
  {
    if ( lin[i] )
      continue;
    auto& o = r.outputs[i];
    o.minterms = minterm_extract( f.output( i ) );
    auto s = simplify( *o.minterms );
    o.simplified = s.result;
    o.trace = std::move( s.trace );
    detail::expr_emitter em( n, in, f.vars(), o.name );
    out[i] = em.emit( *o.simplified, opts.combine, o.route );
  }

  auto first_one = []( linear_form const& l ) -> std::optional<std::size_t> {
    for ( std::size_t j = 0; j < l.coefficients.size(); ++j )
    {
      if ( l.coefficients[j] == trit( 1 ) )
        return j;
    }
    return std::nullopt;
  };
  auto nonzero = []( linear_form const& l ) {
    return static_cast<std::size_t>( std::count_if( l.coefficients.begin(), l.coefficients.end(), []( trit c ) { return c != trit( 0 ); } ) );
  };

  /* constants and plain input copies need no gates */
  std::vector<std::size_t> cascades;
  for ( std::size_t i = 0; i < k; ++i )
  {
    if ( !lin[i] )
      continue;
    auto& o = r.outputs[i];
    o.linear = lin[i];
    if ( nonzero( *lin[i] ) == 0 )
    {
      o.route = output_route::constant;
      out[i] = n.add_ancilla( lin[i]->constant, o.name );
    }
    else if ( nonzero( *lin[i] ) == 1 && lin[i]->constant == trit( 0 ) && first_one( *lin[i] ) )
    {
      o.route = output_route::identity;
      out[i] = in[*first_one( *lin[i] )];
    }
    else
    {
      o.route = output_route::linear;
      cascades.push_back( i );
    }
  }

  /* the last cascade may accumulate onto an input wire nobody reads afterwards */
  std::optional<std::size_t> in_place;
  if ( !cascades.empty() )
  {
    auto const& l = *lin[cascades.back()];
    if ( auto j = first_one( l ); j && ( l.constant == trit( 0 ) || f.arity() > 1 ) )
    {
      bool read_later = false;
      for ( std::size_t i = 0; i < k; ++i )
      {
        read_later = read_later || ( r.outputs[i].route == output_route::identity && out[i] == in[*j] );
      }
      if ( !read_later )
        in_place = *j;
    }
  }

  for ( std::size_t c = 0; c < cascades.size(); ++c )
  {
    auto const i = cascades[c];
    auto const& l = *lin[i];
    bool const here = c + 1 == cascades.size() && in_place;
    wire_id acc = here ? in[*in_place] : n.add_ancilla( l.constant, r.outputs[i].name );
    for ( std::size_t j = 0; j < f.arity(); ++j )
    {
      if ( here && j == *in_place )
        continue;
      for ( int t = 0; t < l.coefficients[j].value(); ++t )
        n.add_gate( feynman_gate{ in[j], acc } );
    }
    if ( here && l.constant != trit( 0 ) )
    {
      auto const ctrl = in[*in_place == 0 ? 1 : 0];
      shift_op const add{ trit( 1 ), l.constant };
      n.add_gate( gtg_gate{ ctrl, acc, { add, add, add } } );
    }
    out[i] = acc;
  }

  for ( std::size_t i = 0; i < k; ++i )
  {
    n.set_output( r.outputs[i].name, out[i] );
  }
  detail::finish( r, f, opts );
  return r;
}

/*! \brief x1 := x1 + x2 + ... + xn with n-1 Feynman gates. */
[[nodiscard]] inline synth_report synth_sum_n( std::size_t count, synth_options const& opts = {} )
{
  detail::check_chain_length( count );
  auto const f = sum_n_function( count );
  synth_report r;
  auto const in = detail::add_inputs( r.circuit, f.vars() );
  for ( std::size_t i = 1; i < count; ++i )
  {
    r.circuit.add_gate( feynman_gate{ in[i], in[0] } );
  }
  r.circuit.set_output( f.name(), in[0] );
  output_report o;
  o.name = f.name();
  o.route = output_route::hierarchical;
  o.linear = linear_detect( f );
  r.outputs.push_back( std::move( o ) );
  detail::finish( r, multi_output_function( f ), opts );
  return r;
}

/*! \brief Balanced tree of n-1 mul2 product blocks, paired level by level. */
[[nodiscard]] inline synth_report synth_prod_n( std::size_t count, synth_options const& opts = {} )
{
  detail::check_chain_length( count );
  auto const f = prod_n_function( count );
  synth_report r;
  auto level = detail::add_inputs( r.circuit, f.vars() );
  auto o = detail::prod2_report( f.name() );
  std::size_t blocks = 0;
  while ( level.size() > 1 )
  {
    std::vector<wire_id> next;
    for ( std::size_t i = 0; i + 1 < level.size(); i += 2 )
    {
      next.push_back( detail::prod2_block( r.circuit, *o.simplified, level[i], level[i + 1], ++blocks ) );
    }
    if ( level.size() % 2 == 1 )
    {
      next.push_back( level.back() );
    }
    level = std::move( next );
  }
  r.circuit.set_output( f.name(), level.front() );
  r.outputs.push_back( std::move( o ) );
  detail::finish( r, multi_output_function( f ), opts );
  return r;
}

/*! \brief mul3 = mul2(a, mul2(b, c)); the carry is synthesized directly. */
[[nodiscard]] inline synth_report synth_mul3( synth_options const& opts = {} )
{
  auto const f = builtin( "mul3" );
  synth_report r;
  auto& n = r.circuit;
  auto const in = detail::add_inputs( n, f.vars() );

  auto prod = detail::prod2_report( f.output( 0 ).name() );
  auto const bc = detail::prod2_block( n, *prod.simplified, in[1], in[2], 1 );
  auto const abc = detail::prod2_block( n, *prod.simplified, in[0], bc, 2 );

  output_report carry;
  carry.name = f.output( 1 ).name();
  carry.minterms = minterm_extract( f.output( 1 ) );
  auto s = simplify( *carry.minterms );
  carry.simplified = s.result;
  carry.trace = std::move( s.trace );
  detail::expr_emitter em( n, in, f.vars(), carry.name );
  auto const c = em.emit( *carry.simplified, opts.combine, carry.route );

  n.set_output( prod.name, abc );
  n.set_output( carry.name, c );
  r.outputs.push_back( std::move( prod ) );
  r.outputs.push_back( std::move( carry ) );
  detail::finish( r, f, opts );
  return r;
}

/*! \brief Builtin lookup that routes sum_n, prod_n and mul3 to their builders. */
[[nodiscard]] inline synth_report synth_builtin( std::string_view name, synth_options const& opts = {} )
{
  if ( auto k = detail::numbered( name, "sum" ) )
    return synth_sum_n( *k, opts );
  if ( auto k = detail::numbered( name, "prod" ) )
    return synth_prod_n( *k, opts );
  if ( name == "mul3" )
    return synth_mul3( opts );
  return synth( builtin( name ), opts );
}

} // namespace tqs
