/*!
  \file gates.hpp
  \brief Ternary gate library, netlist container and cost accounting

  Every gate is a deterministic map on trit-valued wires that rewrites exactly
  one target wire. MAX and MIN are kept as primitives even though they are not
  reversible.
*/

#pragma once

#include "error.hpp"
#include "trit.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tqs
{

struct wire_id
{
  std::uint32_t index{ 0 };

  friend bool operator==( wire_id, wire_id ) = default;
  friend auto operator<=>( wire_id, wire_id ) = default;
};

enum class wire_kind : std::uint8_t
{
  input,
  ancilla
};

struct wire
{
  wire_kind kind{ wire_kind::ancilla };
  trit init{ 0 }; /* ancillae only */
  std::string name;

  friend bool operator==( wire const&, wire const& ) = default;
};

/* shift triples are indexed by control value */
using shift_triple = std::array<shift_op, 3>;

/*! \brief Muthukrishnan-Stroud: target := shift(target) iff control = 2. */
struct ms_gate
{
  wire_id control, target;
  shift_op shift;
  friend bool operator==( ms_gate const&, ms_gate const& ) = default;
};

/*! \brief target := control + target (GF(3)). */
struct feynman_gate
{
  wire_id control, target;
  friend bool operator==( feynman_gate const&, feynman_gate const& ) = default;
};

/*! \brief target := shift(target) iff control1 = control2 = 2. */
struct toffoli_gate
{
  wire_id control1, control2, target;
  shift_op shift;
  friend bool operator==( toffoli_gate const&, toffoli_gate const& ) = default;
};

/*! \brief target := shifts[control](target). */
struct gtg_gate
{
  wire_id control, target;
  shift_triple shifts;
  friend bool operator==( gtg_gate const&, gtg_gate const& ) = default;
};

/*! \brief target := shifts[v](target) iff every control equals v, else unchanged. */
struct multi_gtg_gate
{
  std::vector<wire_id> controls;
  wire_id target;
  shift_triple shifts;
  friend bool operator==( multi_gtg_gate const&, multi_gtg_gate const& ) = default;
};

/*! \brief target := target + 1 iff {control1, control2} = {1, 2}.
 *
 * `pair_repeat` marks the second application in the two-gate realization of
 * a J-valued pair term; cost models may price it separately.
 */
struct c2not_gate
{
  wire_id control1, control2, target;
  bool pair_repeat{ false };
  friend bool operator==( c2not_gate const&, c2not_gate const& ) = default;
};

/*! \brief target := max(inputs, target). */
struct max_gate
{
  std::vector<wire_id> inputs;
  wire_id target;
  friend bool operator==( max_gate const&, max_gate const& ) = default;
};

/*! \brief target := min(inputs, target). */
struct min_gate
{
  std::vector<wire_id> inputs;
  wire_id target;
  friend bool operator==( min_gate const&, min_gate const& ) = default;
};

using gate = std::variant<ms_gate, feynman_gate, toffoli_gate, gtg_gate, multi_gtg_gate, c2not_gate, max_gate, min_gate>;

enum class gate_kind : std::uint8_t
{
  ms,
  feynman,
  toffoli,
  gtg,
  multi_gtg,
  c2not,
  max,
  min
};

[[nodiscard]] inline gate_kind kind_of( gate const& g ) noexcept { return static_cast<gate_kind>( g.index() ); }

[[nodiscard]] constexpr std::string_view kind_name( gate_kind k ) noexcept
{
  constexpr std::array<std::string_view, 8> names{ "ms", "feynman", "toffoli", "gtg", "multi_gtg", "c2not", "max", "min" };
  return names[static_cast<std::size_t>( k )];
}

[[nodiscard]] constexpr bool is_reversible( gate_kind k ) noexcept { return k != gate_kind::max && k != gate_kind::min; }

[[nodiscard]] inline wire_id target_of( gate const& g )
{
  return std::visit( []( auto const& v ) { return v.target; }, g );
}

/*! \brief Control/input wires followed by the target. */
[[nodiscard]] inline std::vector<wire_id> wires_of( gate const& g )
{
  return std::visit(
      []( auto const& v ) -> std::vector<wire_id> {
        using T = std::decay_t<decltype( v )>;
        std::vector<wire_id> ws;
        if constexpr ( std::is_same_v<T, ms_gate> || std::is_same_v<T, feynman_gate> || std::is_same_v<T, gtg_gate> )
          ws = { v.control };
        else if constexpr ( std::is_same_v<T, toffoli_gate> || std::is_same_v<T, c2not_gate> )
          ws = { v.control1, v.control2 };
        else if constexpr ( std::is_same_v<T, multi_gtg_gate> )
          ws = v.controls;
        else
          ws = v.inputs;
        ws.push_back( v.target );
        return ws;
      },
      g );
}

/*! \brief GTG-style gates with a repeated shift in their triple. */
[[nodiscard]] inline bool has_repeated_shifts( gate const& g )
{
  shift_triple const* s = nullptr;
  if ( auto const* p = std::get_if<gtg_gate>( &g ) )
    s = &p->shifts;
  else if ( auto const* q = std::get_if<multi_gtg_gate>( &g ) )
    s = &q->shifts;
  return s && ( ( *s )[0] == ( *s )[1] || ( *s )[0] == ( *s )[2] || ( *s )[1] == ( *s )[2] );
}

/*! \brief Updates the target wire of `g` in place. */
inline void apply_gate_inplace( gate const& g, std::span<trit> state )
{
  std::visit(
      [&]( auto const& v ) {
        using T = std::decay_t<decltype( v )>;
        auto& t = state[v.target.index];
        if constexpr ( std::is_same_v<T, ms_gate> )
        {
          if ( state[v.control.index] == trit( 2 ) )
            t = v.shift( t );
        }
        else if constexpr ( std::is_same_v<T, feynman_gate> )
        {
          t = gf3_add( state[v.control.index], t );
        }
        else if constexpr ( std::is_same_v<T, toffoli_gate> )
        {
          if ( state[v.control1.index] == trit( 2 ) && state[v.control2.index] == trit( 2 ) )
            t = v.shift( t );
        }
        else if constexpr ( std::is_same_v<T, gtg_gate> )
        {
          t = v.shifts[static_cast<std::size_t>( state[v.control.index].value() )]( t );
        }
        else if constexpr ( std::is_same_v<T, multi_gtg_gate> )
        {
          auto const first = state[v.controls.front().index];
          bool const agree = std::all_of( v.controls.begin(), v.controls.end(), [&]( wire_id c ) { return state[c.index] == first; } );
          if ( agree )
            t = v.shifts[static_cast<std::size_t>( first.value() )]( t );
        }
        else if constexpr ( std::is_same_v<T, c2not_gate> )
        {
          auto const a = state[v.control1.index], b = state[v.control2.index];
          if ( a != b && a != trit( 0 ) && b != trit( 0 ) )
            t = t_not( t );
        }
        else if constexpr ( std::is_same_v<T, max_gate> )
        {
          for ( auto w : v.inputs )
            t = t_or( t, state[w.index] );
        }
        else
        {
          for ( auto w : v.inputs )
            t = t_and( t, state[w.index] );
        }
      },
      g );
}

[[nodiscard]] inline std::vector<trit> apply_gate( gate const& g, std::vector<trit> state )
{
  auto const ws = wires_of( g );
  if ( std::any_of( ws.begin(), ws.end(), [&]( wire_id w ) { return w.index >= state.size(); } ) )
  {
    throw input_error( "gate refers to a wire outside the state vector" );
  }
  apply_gate_inplace( g, state );
  return state;
}

/* ---------------------------------------------------------------------------
 * Netlist
 * ------------------------------------------------------------------------- */

class netlist
{
public:
  wire_id add_input( std::string name )
  {
    wire_id const id{ static_cast<std::uint32_t>( _wires.size() ) };
    _wires.push_back( { wire_kind::input, trit( 0 ), std::move( name ) } );
    _inputs.push_back( id );
    return id;
  }

  wire_id add_ancilla( trit init, std::string name = {} )
  {
    wire_id const id{ static_cast<std::uint32_t>( _wires.size() ) };
    _wires.push_back( { wire_kind::ancilla, init, std::move( name ) } );
    _ancillae.push_back( id );
    return id;
  }

  /*! \brief Appends a gate after checking its wire references. */
  void add_gate( gate g )
  {
    auto ws = wires_of( g );
    if ( auto const* m = std::get_if<multi_gtg_gate>( &g ); m && m->controls.empty() )
    {
      throw input_error( "multi_gtg needs at least one control" );
    }
    for ( auto w : ws )
    {
      check_wire( w );
    }
    std::sort( ws.begin(), ws.end() );
    if ( std::adjacent_find( ws.begin(), ws.end() ) != ws.end() )
    {
      throw input_error( std::string( kind_name( kind_of( g ) ) ) + " gate references a wire twice" );
    }
    _gates.push_back( std::move( g ) );
  }

  void set_output( std::string name, wire_id w )
  {
    check_wire( w );
    _outputs.emplace_back( std::move( name ), w );
  }

  [[nodiscard]] std::vector<wire> const& wires() const noexcept { return _wires; }
  [[nodiscard]] std::vector<wire_id> const& inputs() const noexcept { return _inputs; }
  [[nodiscard]] std::vector<wire_id> const& ancillae() const noexcept { return _ancillae; }
  [[nodiscard]] std::vector<gate> const& gates() const noexcept { return _gates; }
  [[nodiscard]] std::vector<std::pair<std::string, wire_id>> const& outputs() const noexcept { return _outputs; }
  [[nodiscard]] std::size_t num_wires() const noexcept { return _wires.size(); }
  [[nodiscard]] wire const& at( wire_id w ) const { return _wires.at( w.index ); }

  [[nodiscard]] std::string wire_label( wire_id w ) const
  {
    auto const& wr = _wires.at( w.index );
    return wr.name.empty() ? "w" + std::to_string( w.index ) : wr.name;
  }

  /* initial state with inputs zeroed */
  [[nodiscard]] std::vector<trit> initial_state() const
  {
    std::vector<trit> s;
    s.reserve( _wires.size() );
    for ( auto const& w : _wires )
    {
      s.push_back( w.kind == wire_kind::ancilla ? w.init : trit( 0 ) );
    }
    return s;
  }

  void validate() const
  {
    if ( _outputs.empty() )
    {
      throw input_error( "netlist has no outputs" );
    }
  }

  friend bool operator==( netlist const&, netlist const& ) = default;

private:
  void check_wire( wire_id w ) const
  {
    if ( w.index >= _wires.size() )
    {
      throw input_error( "reference to undeclared wire " + std::to_string( w.index ) );
    }
  }

  std::vector<wire> _wires;
  std::vector<wire_id> _inputs;
  std::vector<wire_id> _ancillae;
  std::vector<gate> _gates;
  std::vector<std::pair<std::string, wire_id>> _outputs;
};

[[nodiscard]] inline std::size_t ancilla_count( netlist const& n ) noexcept { return n.ancillae().size(); }

/*! \brief ASAP level count: a gate sits one level above the latest gate sharing any of its wires. */
[[nodiscard]] inline std::size_t depth( netlist const& n )
{
  std::vector<std::size_t> level( n.num_wires(), 0 );
  std::size_t d = 0;
  for ( auto const& g : n.gates() )
  {
    auto const ws = wires_of( g );
    std::size_t l = 0;
    for ( auto w : ws )
    {
      l = std::max( l, level[w.index] );
    }
    ++l;
    for ( auto w : ws )
    {
      level[w.index] = l;
    }
    d = std::max( d, l );
  }
  return d;
}

/* ---------------------------------------------------------------------------
 * Cost models
 * ------------------------------------------------------------------------- */

/*! \brief Per-gate-kind M-S equivalents.
 *
 * MultiGTG, MAX and MIN may scale with their fan-in; the effective price is
 * `base + per * k` for k controls or inputs.
 */
struct cost_model
{
  std::string name;
  std::uint64_t ms{ 1 };
  std::uint64_t feynman{ 4 };
  std::uint64_t toffoli{ 5 };
  std::uint64_t gtg{ 5 };
  std::uint64_t multi_gtg_base{ 5 };
  std::uint64_t multi_gtg_per_control{ 0 };
  std::uint64_t c2not{ 8 };
  std::uint64_t c2not_pair_repeat{ 0 };
  std::uint64_t max_base{ 0 };
  std::uint64_t max_per_input{ 0 };
  std::uint64_t min_base{ 0 };
  std::uint64_t min_per_input{ 0 };

  /*! \brief Feynman 4, Toffoli 5, GTG 5, C2NOT 8; OR/AND combination is free
   * and a J-valued pair counts as a single C2NOT. */
  static cost_model paper() { return cost_model{ .name = "paper" }; }

  /*! \brief Artifact estimate: fan-in k MAX/MIN/MultiGTG cost 5k and every
   * C2NOT is charged. */
  static cost_model strict()
  {
    cost_model m{ .name = "strict" };
    m.multi_gtg_base = 0;
    m.multi_gtg_per_control = 5;
    m.c2not_pair_repeat = 8;
    m.max_per_input = 5;
    m.min_per_input = 5;
    return m;
  }

  static cost_model by_name( std::string_view name )
  {
    if ( name == "paper" )
      return paper();
    if ( name == "strict" )
      return strict();
    throw input_error( "unknown cost model '" + std::string( name ) + "' (expected paper or strict)" );
  }

  /* same model with pair repeats charged as ordinary C2NOTs */
  [[nodiscard]] cost_model without_pair_discount() const
  {
    auto m = *this;
    m.c2not_pair_repeat = m.c2not;
    return m;
  }

  [[nodiscard]] std::uint64_t gate_cost( gate const& g ) const
  {
    return std::visit(
        [&]( auto const& v ) -> std::uint64_t {
          using T = std::decay_t<decltype( v )>;
          if constexpr ( std::is_same_v<T, ms_gate> )
            return ms;
          else if constexpr ( std::is_same_v<T, feynman_gate> )
            return feynman;
          else if constexpr ( std::is_same_v<T, toffoli_gate> )
            return toffoli;
          else if constexpr ( std::is_same_v<T, gtg_gate> )
            return gtg;
          else if constexpr ( std::is_same_v<T, multi_gtg_gate> )
            return multi_gtg_base + multi_gtg_per_control * v.controls.size();
          else if constexpr ( std::is_same_v<T, c2not_gate> )
            return v.pair_repeat ? c2not_pair_repeat : c2not;
          else if constexpr ( std::is_same_v<T, max_gate> )
            return max_base + max_per_input * v.inputs.size();
          else
            return min_base + min_per_input * v.inputs.size();
        },
        g );
  }
};

[[nodiscard]] inline std::uint64_t cost( netlist const& n, cost_model const& model )
{
  std::uint64_t total = 0;
  for ( auto const& g : n.gates() )
  {
    total += model.gate_cost( g );
  }
  return total;
}

} // namespace tqs
