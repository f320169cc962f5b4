/*!
  \file netlist_io.hpp
  \brief JSON and plain-text forms of a netlist

  JSON layout (keys in this order):

    { "format": "tqs-netlist", "version": 1,
      "wires":   [ { "index": 0, "kind": "input", "name": "a" },
                   { "index": 2, "kind": "ancilla", "init": 0 }, ... ],
      "gates":   [ { "kind": "gtg", "control": 0, "target": 2,
                     "shifts": [[1,1],[1,0],[2,0]] }, ... ],
      "outputs": [ { "name": "mul2", "wire": 4 } ] }

  Shift operations are [mult, add] pairs.
*/

#pragma once

#include "error.hpp"
#include "gates.hpp"
#include "trit.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace tqs
{

using ordered_json = nlohmann::ordered_json;

namespace detail
{

inline ordered_json shift_to_json( shift_op s ) { return ordered_json::array( { s.mult().value(), s.add().value() } ); }

inline ordered_json wires_to_json( std::vector<wire_id> const& ws )
{
  auto a = ordered_json::array();
  for ( auto w : ws )
  {
    a.push_back( w.index );
  }
  return a;
}

inline ordered_json triple_to_json( shift_triple const& t )
{
  return ordered_json::array( { shift_to_json( t[0] ), shift_to_json( t[1] ), shift_to_json( t[2] ) } );
}

template<class Json>
int int_field( Json const& j, char const* key )
{
  if ( !j.contains( key ) || !j.at( key ).is_number_integer() )
  {
    throw input_error( std::string( "netlist JSON: missing integer field '" ) + key + "'" );
  }
  return j.at( key ).template get<int>();
}

template<class Json>
wire_id wire_field( Json const& j, char const* key )
{
  auto const v = int_field( j, key );
  if ( v < 0 )
  {
    throw input_error( std::string( "netlist JSON: negative wire index in '" ) + key + "'" );
  }
  return wire_id{ static_cast<std::uint32_t>( v ) };
}

template<class Json>
std::vector<wire_id> wire_list_field( Json const& j, char const* key )
{
  if ( !j.contains( key ) || !j.at( key ).is_array() )
  {
    throw input_error( std::string( "netlist JSON: missing wire list '" ) + key + "'" );
  }
  std::vector<wire_id> ws;
  for ( auto const& v : j.at( key ) )
  {
    if ( !v.is_number_integer() || v.template get<int>() < 0 )
    {
      throw input_error( std::string( "netlist JSON: bad wire index in '" ) + key + "'" );
    }
    ws.push_back( wire_id{ v.template get<std::uint32_t>() } );
  }
  return ws;
}

template<class Json>
shift_op shift_from_json( Json const& j )
{
  if ( !j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer() )
  {
    throw input_error( "netlist JSON: shift must be [mult, add]" );
  }
  return shift_op( j[0].template get<int>(), j[1].template get<int>() );
}

template<class Json>
shift_triple triple_field( Json const& j )
{
  if ( !j.contains( "shifts" ) || !j.at( "shifts" ).is_array() || j.at( "shifts" ).size() != 3 )
  {
    throw input_error( "netlist JSON: 'shifts' must hold three shift pairs" );
  }
  auto const& s = j.at( "shifts" );
  return { shift_from_json( s[0] ), shift_from_json( s[1] ), shift_from_json( s[2] ) };
}

} // namespace detail

[[nodiscard]] inline ordered_json gate_to_json( gate const& g )
{
  ordered_json j;
  j["kind"] = kind_name( kind_of( g ) );
  std::visit(
      [&]( auto const& v ) {
        using T = std::decay_t<decltype( v )>;
        if constexpr ( std::is_same_v<T, ms_gate> )
        {
          j["control"] = v.control.index;
          j["target"] = v.target.index;
          j["shift"] = detail::shift_to_json( v.shift );
        }
        else if constexpr ( std::is_same_v<T, feynman_gate> )
        {
          j["control"] = v.control.index;
          j["target"] = v.target.index;
        }
        else if constexpr ( std::is_same_v<T, toffoli_gate> )
        {
          j["controls"] = detail::wires_to_json( { v.control1, v.control2 } );
          j["target"] = v.target.index;
          j["shift"] = detail::shift_to_json( v.shift );
        }
        else if constexpr ( std::is_same_v<T, gtg_gate> )
        {
          j["control"] = v.control.index;
          j["target"] = v.target.index;
          j["shifts"] = detail::triple_to_json( v.shifts );
        }
        else if constexpr ( std::is_same_v<T, multi_gtg_gate> )
        {
          j["controls"] = detail::wires_to_json( v.controls );
          j["target"] = v.target.index;
          j["shifts"] = detail::triple_to_json( v.shifts );
        }
        else if constexpr ( std::is_same_v<T, c2not_gate> )
        {
          j["controls"] = detail::wires_to_json( { v.control1, v.control2 } );
          j["target"] = v.target.index;
          j["pair_repeat"] = v.pair_repeat;
        }
        else
        {
          j["inputs"] = detail::wires_to_json( v.inputs );
          j["target"] = v.target.index;
        }
      },
      g );
  return j;
}

[[nodiscard]] inline ordered_json to_json( netlist const& n )
{
  ordered_json j;
  j["format"] = "tqs-netlist";
  j["version"] = 1;
  auto ws = ordered_json::array();
  for ( std::size_t i = 0; i < n.wires().size(); ++i )
  {
    auto const& w = n.wires()[i];
    ordered_json o;
    o["index"] = i;
    o["kind"] = w.kind == wire_kind::input ? "input" : "ancilla";
    if ( w.kind == wire_kind::ancilla )
    {
      o["init"] = w.init.value();
    }
    if ( !w.name.empty() )
    {
      o["name"] = w.name;
    }
    ws.push_back( std::move( o ) );
  }
  j["wires"] = std::move( ws );
  auto gs = ordered_json::array();
  for ( auto const& g : n.gates() )
  {
    gs.push_back( gate_to_json( g ) );
  }
  j["gates"] = std::move( gs );
  auto os = ordered_json::array();
  for ( auto const& [name, w] : n.outputs() )
  {
    ordered_json o;
    o["name"] = name;
    o["wire"] = w.index;
    os.push_back( std::move( o ) );
  }
  j["outputs"] = std::move( os );
  return j;
}

[[nodiscard]] inline std::string to_json_text( netlist const& n ) { return to_json( n ).dump( 2 ) + "\n"; }

/*! \brief Rebuilds a netlist; malformed documents raise input errors. */
[[nodiscard]] inline netlist netlist_from_json( ordered_json const& j )
{
  if ( !j.is_object() || !j.contains( "wires" ) || !j.contains( "gates" ) || !j.contains( "outputs" ) )
  {
    throw input_error( "netlist JSON: expected an object with wires, gates and outputs" );
  }
  netlist n;
  std::size_t expected = 0;
  for ( auto const& w : j.at( "wires" ) )
  {
    if ( static_cast<std::size_t>( detail::int_field( w, "index" ) ) != expected++ )
    {
      throw input_error( "netlist JSON: wire indices must be dense and in order" );
    }
    auto const kind = w.contains( "kind" ) && w.at( "kind" ).is_string() ? w.at( "kind" ).get<std::string>() : "";
    auto const name = w.contains( "name" ) && w.at( "name" ).is_string() ? w.at( "name" ).get<std::string>() : "";
    if ( kind == "input" )
      n.add_input( name );
    else if ( kind == "ancilla" )
      n.add_ancilla( trit( detail::int_field( w, "init" ) ), name );
    else
      throw input_error( "netlist JSON: wire kind must be input or ancilla" );
  }
  for ( auto const& g : j.at( "gates" ) )
  {
    auto const kind = g.contains( "kind" ) && g.at( "kind" ).is_string() ? g.at( "kind" ).get<std::string>() : "";
    auto two = [&]() {
      auto cs = detail::wire_list_field( g, "controls" );
      if ( cs.size() != 2 )
      {
        throw input_error( "netlist JSON: " + kind + " needs two controls" );
      }
      return cs;
    };
    if ( kind == "ms" )
      n.add_gate( ms_gate{ detail::wire_field( g, "control" ), detail::wire_field( g, "target" ), detail::shift_from_json( g.at( "shift" ) ) } );
    else if ( kind == "feynman" )
      n.add_gate( feynman_gate{ detail::wire_field( g, "control" ), detail::wire_field( g, "target" ) } );
    else if ( kind == "toffoli" )
    {
      auto cs = two();
      n.add_gate( toffoli_gate{ cs[0], cs[1], detail::wire_field( g, "target" ), detail::shift_from_json( g.at( "shift" ) ) } );
    }
    else if ( kind == "gtg" )
      n.add_gate( gtg_gate{ detail::wire_field( g, "control" ), detail::wire_field( g, "target" ), detail::triple_field( g ) } );
    else if ( kind == "multi_gtg" )
      n.add_gate( multi_gtg_gate{ detail::wire_list_field( g, "controls" ), detail::wire_field( g, "target" ), detail::triple_field( g ) } );
    else if ( kind == "c2not" )
    {
      auto cs = two();
      bool const rep = g.contains( "pair_repeat" ) && g.at( "pair_repeat" ).is_boolean() && g.at( "pair_repeat" ).get<bool>();
      n.add_gate( c2not_gate{ cs[0], cs[1], detail::wire_field( g, "target" ), rep } );
    }
    else if ( kind == "max" )
      n.add_gate( max_gate{ detail::wire_list_field( g, "inputs" ), detail::wire_field( g, "target" ) } );
    else if ( kind == "min" )
      n.add_gate( min_gate{ detail::wire_list_field( g, "inputs" ), detail::wire_field( g, "target" ) } );
    else
      throw input_error( "netlist JSON: unknown gate kind '" + kind + "'" );
  }
  for ( auto const& o : j.at( "outputs" ) )
  {
    if ( !o.contains( "name" ) || !o.at( "name" ).is_string() )
    {
      throw input_error( "netlist JSON: output without a name" );
    }
    n.set_output( o.at( "name" ).get<std::string>(), detail::wire_field( o, "wire" ) );
  }
  n.validate();
  return n;
}

[[nodiscard]] inline netlist parse_netlist_json( std::string const& text )
{
  ordered_json j;
  try
  {
    j = ordered_json::parse( text );
  }
  catch ( nlohmann::json::parse_error const& e )
  {
    throw input_error( std::string( "netlist JSON: " ) + e.what() );
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw input_error( std::string( "netlist JSON: " ) + e.what() );
  }
  try
  {
    return netlist_from_json( j );
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw input_error( std::string( "netlist JSON: " ) + e.what() );
  }
}

/*! \brief One line per wire and gate, e.g. `gtg a -> t1 [x+1, x, 2x]`. */
[[nodiscard]] inline std::string to_text( netlist const& n )
{
  std::ostringstream os;
  auto label = [&]( wire_id w ) { return n.wire_label( w ); };
  auto list = [&]( std::vector<wire_id> const& ws ) {
    std::string s;
    for ( std::size_t i = 0; i < ws.size(); ++i )
    {
      s += ( i ? "," : "" ) + label( ws[i] );
    }
    return s;
  };
  for ( std::size_t i = 0; i < n.wires().size(); ++i )
  {
    auto const& w = n.wires()[i];
    os << "wire " << label( wire_id{ static_cast<std::uint32_t>( i ) } ) << ( w.kind == wire_kind::input ? " input" : " ancilla=" + std::string( 1, w.init.to_char() ) ) << '\n';
  }
  for ( auto const& g : n.gates() )
  {
    auto const ws = wires_of( g );
    std::vector<wire_id> controls( ws.begin(), ws.end() - 1 );
    os << kind_name( kind_of( g ) ) << ' ' << list( controls ) << " -> " << label( target_of( g ) );
    std::visit(
        [&]( auto const& v ) {
          using T = std::decay_t<decltype( v )>;
          if constexpr ( requires { v.shifts; } )
            os << " [" << shift_formula( v.shifts[0] ) << ", " << shift_formula( v.shifts[1] ) << ", " << shift_formula( v.shifts[2] ) << "]";
          else if constexpr ( requires { v.shift; } )
            os << " [" << shift_formula( v.shift ) << "]";
          else if constexpr ( std::is_same_v<T, c2not_gate> )
          {
            if ( v.pair_repeat )
              os << " (pair repeat)";
          }
        },
        g );
    os << '\n';
  }
  for ( auto const& [name, w] : n.outputs() )
  {
    os << "output " << name << " = " << label( w ) << '\n';
  }
  return os.str();
}

} // namespace tqs
