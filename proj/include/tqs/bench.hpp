/*!
  \file bench.hpp
  \brief Benchmark suite with the published reference figures

  Only the sum_n, prod_n and mul2 costs and reduced ancilla counts follow from
  a closed form, so only those rows are certified against the reference. The
  maximum-ancilla figure is certified on every row where the counting formula
  reproduces it (all but tfadd).
*/

#pragma once

#include "netlist_io.hpp"
#include "synth.hpp"

#include <array>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tqs
{

struct reference_row
{
  std::string_view circuit;
  std::size_t max_ancilla;
  std::size_t reduced_ancilla;
  std::uint64_t cost;
  std::optional<std::uint64_t> comparison; /* prior-work cost, display only */
  bool cost_certified;
  bool max_ancilla_certified;
};

inline constexpr std::array<reference_row, 20> reference_table{ {
    { "sum2", 12, 0, 4, 5, true, true },
    { "sum3", 54, 0, 8, 10, true, true },
    { "sum4", 216, 0, 12, 15, true, true },
    { "sum5", 810, 0, 16, std::nullopt, true, true },
    { "sum6", 2916, 0, 20, std::nullopt, true, true },
    { "sum7", 10206, 0, 24, std::nullopt, true, true },
    { "prod2", 8, 3, 18, 20, true, true },
    { "prod3", 24, 6, 36, 65, true, true },
    { "prod4", 64, 9, 54, std::nullopt, true, true },
    { "prod5", 160, 12, 72, std::nullopt, true, true },
    { "prod6", 384, 15, 90, std::nullopt, true, true },
    { "prod7", 896, 18, 108, std::nullopt, true, true },
    { "mul2", 10, 4, 23, 25, true, true },
    { "mul3", 36, 11, 64, std::nullopt, false, true },
    { "thadd", 18, 2, 21, 20, false, true },
    { "tfadd", 63, 4, 42, 55, false, false },
    { "avg2", 12, 7, 38, 15, false, true },
    { "avg3", 51, 16, 89, 40, false, true },
    { "sqsum2", 16, 7, 38, 10, false, true },
    { "sqsum3", 54, 24, 130, 15, false, true },
} };

[[nodiscard]] inline std::optional<reference_row> find_reference( std::string_view circuit )
{
  for ( auto const& r : reference_table )
  {
    if ( r.circuit == circuit )
      return r;
  }
  return std::nullopt;
}

/* circuits in report order */
[[nodiscard]] inline std::vector<std::string> bench_circuits()
{
  std::vector<std::string> names;
  for ( auto const& r : reference_table )
  {
    names.emplace_back( r.circuit );
  }
  names.emplace_back( "a2bcc" );
  names.emplace_back( "g_example" );
  return names;
}

enum class match : std::uint8_t
{
  yes,
  no,
  not_certified
};

[[nodiscard]] constexpr std::string_view match_name( match m ) noexcept
{
  return m == match::yes ? "yes" : m == match::no ? "no" : "not-certified";
}

struct bench_row
{
  std::string circuit;
  std::size_t inputs{ 0 };
  std::size_t outputs{ 0 };
  std::size_t max_ancilla{ 0 };
  std::size_t reduced_ancilla{ 0 };
  std::uint64_t cost{ 0 };
  std::uint64_t cost_full{ 0 };
  std::size_t depth{ 0 };
  std::size_t gates{ 0 };
  bool verified{ false };
  std::optional<reference_row> reference;
  match reference_match{ match::not_certified };  /* cost and reduced ancilla */
  match max_ancilla_match{ match::not_certified };
  std::optional<bool> agrees_with_reference; /* raw comparison, certified or not */
};

[[nodiscard]] inline bench_row bench_one( std::string const& circuit, synth_options const& opts = {} )
{
  auto const r = synth_builtin( circuit, opts );
  bench_row row;
  row.circuit = circuit;
  row.inputs = r.circuit.inputs().size();
  row.outputs = r.circuit.outputs().size();
  row.max_ancilla = r.max_ancilla;
  row.reduced_ancilla = r.reduced_ancilla;
  row.cost = r.cost;
  row.cost_full = r.cost_full;
  row.depth = r.depth;
  row.gates = r.gate_count;
  row.verified = r.verified;
  row.reference = find_reference( circuit );
  if ( row.reference )
  {
    auto const& ref = *row.reference;
    bool const agrees = ref.cost == row.cost && ref.reduced_ancilla == row.reduced_ancilla;
    row.agrees_with_reference = agrees;
    if ( ref.cost_certified )
      row.reference_match = agrees ? match::yes : match::no;
    if ( ref.max_ancilla_certified )
      row.max_ancilla_match = ref.max_ancilla == row.max_ancilla ? match::yes : match::no;
  }
  return row;
}

/*! \brief Synthesizes and verifies every benchmark circuit. */
[[nodiscard]] inline std::vector<bench_row> run_benchmarks( synth_options opts = {} )
{
  opts.verify = true;
  std::vector<bench_row> rows;
  for ( auto const& c : bench_circuits() )
  {
    rows.push_back( bench_one( c, opts ) );
  }
  return rows;
}

[[nodiscard]] inline bool all_verified( std::vector<bench_row> const& rows )
{
  return std::all_of( rows.begin(), rows.end(), []( bench_row const& r ) { return r.verified; } );
}

[[nodiscard]] inline ordered_json to_json( std::vector<bench_row> const& rows, std::string const& model = "paper" )
{
  auto opt = []( auto const& v ) -> ordered_json {
    if ( v )
      return *v;
    return nullptr;
  };
  ordered_json j;
  j["format"] = "tqs-bench";
  j["version"] = 1;
  j["cost_model"] = model;
  auto a = ordered_json::array();
  for ( auto const& r : rows )
  {
    ordered_json o;
    o["circuit"] = r.circuit;
    o["inputs"] = r.inputs;
    o["outputs"] = r.outputs;
    o["max_ancilla"] = r.max_ancilla;
    o["reduced_ancilla"] = r.reduced_ancilla;
    o["cost"] = r.cost;
    o["cost_full"] = r.cost_full;
    o["depth"] = r.depth;
    o["gates"] = r.gates;
    o["verified"] = r.verified;
    ordered_json ref = nullptr;
    if ( r.reference )
    {
      ref = ordered_json::object();
      ref["max_ancilla"] = r.reference->max_ancilla;
      ref["reduced_ancilla"] = r.reference->reduced_ancilla;
      ref["cost"] = r.reference->cost;
      ref["comparison_cost"] = opt( r.reference->comparison );
    }
    o["reference"] = std::move( ref );
    o["reference_match"] = match_name( r.reference_match );
    o["max_ancilla_match"] = match_name( r.max_ancilla_match );
    o["agrees_with_reference"] = opt( r.agrees_with_reference );
    a.push_back( std::move( o ) );
  }
  j["rows"] = std::move( a );
  return j;
}

[[nodiscard]] inline std::string to_text( std::vector<bench_row> const& rows )
{
  std::vector<std::vector<std::string>> cells{
      { "circuit", "max anc", "ref", "anc", "ref", "cost", "ref", "cmp", "full", "depth", "verified", "match", "max match" } };
  auto num = []( auto const& v ) { return v ? std::to_string( *v ) : std::string( "-" ); };
  for ( auto const& r : rows )
  {
    auto const& ref = r.reference;
    cells.push_back( { r.circuit, std::to_string( r.max_ancilla ), ref ? std::to_string( ref->max_ancilla ) : "-",
                       std::to_string( r.reduced_ancilla ), ref ? std::to_string( ref->reduced_ancilla ) : "-", std::to_string( r.cost ),
                       ref ? std::to_string( ref->cost ) : "-", ref ? num( ref->comparison ) : "-", std::to_string( r.cost_full ),
                       std::to_string( r.depth ), r.verified ? "yes" : "no", std::string( match_name( r.reference_match ) ),
                       std::string( match_name( r.max_ancilla_match ) ) } );
  }
  std::vector<std::size_t> width( cells.front().size(), 0 );
  for ( auto const& row : cells )
  {
    for ( std::size_t c = 0; c < row.size(); ++c )
      width[c] = std::max( width[c], row[c].size() );
  }
  std::ostringstream os;
  for ( auto const& row : cells )
  {
    for ( std::size_t c = 0; c < row.size(); ++c )
    {
      if ( c == 0 )
        os << std::left << std::setw( static_cast<int>( width[c] ) ) << row[c];
      else
        os << "  " << std::right << std::setw( static_cast<int>( width[c] ) ) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

} // namespace tqs
