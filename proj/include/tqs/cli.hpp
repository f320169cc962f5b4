/*!
  \file cli.hpp
  \brief Command dispatcher behind the `tqsynth` executable

  Exit codes: 0 success, 1 internal error, 2 input error, 3 verification
  failure.
*/

#pragma once

#include "bench.hpp"
#include "error.hpp"
#include "netlist_io.hpp"
#include "sim.hpp"
#include "synth.hpp"
#include "truth_table.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tqs
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_verification = 3;

namespace detail
{

inline std::string read_file( std::filesystem::path const& p )
{
  std::ifstream in( p, std::ios::binary );
  if ( !in )
  {
    throw input_error( "cannot open " + p.string() );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file( std::filesystem::path const& p, std::string const& text )
{
  std::ofstream out( p, std::ios::binary );
  if ( !out || !( out << text ) )
  {
    throw input_error( "cannot write " + p.string() );
  }
}

/* a truth-table file when one exists at `arg`, otherwise a builtin name */
struct resolved_input
{
  multi_output_function function;
  std::optional<std::string> builtin_name;
};

inline resolved_input resolve_input( std::string const& arg )
{
  std::error_code ec;
  if ( std::filesystem::is_regular_file( arg, ec ) )
  {
    auto const text = read_file( arg );
    std::string const where = arg + ": ";
    try
    {
      return { parse_truth_table( text, std::filesystem::path( arg ).stem().string() ), std::nullopt };
    }
    catch ( error const& e )
    {
      throw error( e.kind(), where + e.what() );
    }
  }
  if ( auto f = find_builtin( arg ) )
  {
    return { *f, arg };
  }
  throw input_error( "'" + arg + "' is neither a readable truth-table file nor a builtin function" );
}

inline std::string summary_line( synth_report const& r )
{
  std::ostringstream os;
  os << r.name << ": cost=" << r.cost << " (" << r.model << ")";
  if ( r.cost_full != r.cost )
    os << " cost_full=" << r.cost_full;
  os << " ancilla=" << r.reduced_ancilla << " max_ancilla=" << r.max_ancilla << " depth=" << r.depth << " gates=" << r.gate_count
     << " verified=" << ( r.verified ? "yes" : "skipped" );
  return os.str();
}

inline void print_outputs( std::ostream& out, synth_report const& r, bool explain )
{
  for ( auto const& o : r.outputs )
  {
    out << "  " << o.name << " [" << route_name( o.route ) << "]";
    if ( o.simplified )
      out << " = " << to_string( *o.simplified );
    out << '\n';
    if ( explain && o.minterms )
    {
      out << "    minterms: " << to_string( *o.minterms ) << '\n';
      std::istringstream steps( o.trace.to_string() );
      for ( std::string line; std::getline( steps, line ); )
        out << "    " << line << '\n';
    }
  }
  if ( r.relaxed_gtg > 0 )
    out << "  note: " << r.relaxed_gtg << " GTG gate(s) repeat a shift in their triple\n";
}

inline int cmd_synth( std::string const& input, std::string const& output, std::string const& format, bool explain, std::string const& model,
                      std::string const& combine, bool no_verify, bool print, std::ostream& out )
{
  synth_options opts;
  opts.model = cost_model::by_name( model );
  opts.combine = parse_combine( combine );
  opts.verify = !no_verify;
  if ( format != "json" && format != "text" )
  {
    throw input_error( "unknown netlist format '" + format + "' (expected json or text)" );
  }

  auto const in = resolve_input( input );
  auto const r = in.builtin_name ? synth_builtin( *in.builtin_name, opts ) : synth( in.function, opts );
  auto const text = format == "json" ? to_json_text( r.circuit ) : to_text( r.circuit );

  out << summary_line( r ) << '\n';
  print_outputs( out, r, explain );
  if ( !output.empty() )
    write_file( output, text );
  if ( print )
    out << text;
  return exit_ok;
}

inline int cmd_verify( std::string const& netlist_path, std::string const& table, std::ostream& out )
{
  auto const n = parse_netlist_json( read_file( netlist_path ) );
  auto const f = resolve_input( table ).function;
  auto const r = exhaustive_check( n, f );
  if ( r )
  {
    out << "PASS: " << pow3( f.arity() ) << " inputs checked\n";
    return exit_ok;
  }
  auto const& m = *r.counterexample;
  out << "FAIL: counterexample " << format_input( m.input ) << ": output " << m.output_name << " expected " << m.expected.to_char() << ", got "
      << m.actual.to_char() << '\n';
  return exit_verification;
}

inline int cmd_bench( bool json, std::string const& model, std::ostream& out )
{
  synth_options opts;
  opts.model = cost_model::by_name( model );
  auto const rows = run_benchmarks( opts );
  if ( json )
    out << to_json( rows, opts.model.name ).dump( 2 ) << '\n';
  else
    out << to_text( rows );
  return all_verified( rows ) ? exit_ok : exit_verification;
}

inline int cmd_table( std::string const& name, std::ostream& out )
{
  out << to_truth_table_text( builtin( name ) );
  return exit_ok;
}

inline int cmd_simplify( std::string const& input, bool explain, std::ostream& out )
{
  auto const f = resolve_input( input ).function;
  for ( auto const& o : f.outputs() )
  {
    auto const m = minterm_extract( o );
    auto const s = simplify( m );
    out << o.name() << " = " << to_string( s.result ) << '\n';
    if ( explain )
    {
      out << "  minterms: " << to_string( m ) << '\n';
      std::istringstream steps( s.trace.to_string() );
      for ( std::string line; std::getline( steps, line ); )
        out << "  " << line << '\n';
    }
  }
  return exit_ok;
}

} // namespace detail

/*! \brief Runs one command line; `args` excludes the program name. */
inline int run_cli( std::vector<std::string> args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Synthesis of ternary reversible circuits from truth tables", "tqsynth" };
  app.require_subcommand( 1 );

  std::string input, output, format = "json", model = "paper", combine = "max", netlist_path, table;
  bool explain = false, no_verify = false, print = false, json = false;

  auto* synth_cmd = app.add_subcommand( "synth", "synthesize a truth-table file or builtin" );
  synth_cmd->add_option( "input", input, "truth-table file or builtin name" )->required();
  synth_cmd->add_option( "-o,--output", output, "write the netlist to this file" );
  synth_cmd->add_option( "--format", format, "netlist format: json or text" );
  synth_cmd->add_flag( "--explain", explain, "print minterms and rewrite steps" );
  synth_cmd->add_option( "--cost-model", model, "paper or strict" );
  synth_cmd->add_option( "--combine", combine, "term combination: shared or max" );
  synth_cmd->add_flag( "--no-verify", no_verify, "skip the exhaustive check" );
  synth_cmd->add_flag( "--print", print, "print the netlist" );

  auto* verify_cmd = app.add_subcommand( "verify", "check a JSON netlist against a truth table" );
  verify_cmd->add_option( "netlist", netlist_path, "netlist JSON file" )->required();
  verify_cmd->add_option( "table", table, "truth-table file or builtin name" )->required();

  auto* bench_cmd = app.add_subcommand( "bench", "run the benchmark suite" );
  bench_cmd->add_flag( "--json", json, "emit JSON" );
  bench_cmd->add_option( "--cost-model", model, "paper or strict" );

  auto* table_cmd = app.add_subcommand( "table", "print a builtin truth table" );
  table_cmd->add_option( "name", input, "builtin name" )->required();

  auto* simplify_cmd = app.add_subcommand( "simplify-only", "print simplified expressions" );
  simplify_cmd->add_option( "input", input, "truth-table file or builtin name" )->required();
  simplify_cmd->add_flag( "--explain", explain, "print minterms and rewrite steps" );

  std::reverse( args.begin(), args.end() );
  try
  {
    app.parse( args );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return exit_ok;
  }
  catch ( CLI::ParseError const& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }

  try
  {
    if ( synth_cmd->parsed() )
      return detail::cmd_synth( input, output, format, explain, model, combine, no_verify, print, out );
    if ( verify_cmd->parsed() )
      return detail::cmd_verify( netlist_path, table, out );
    if ( bench_cmd->parsed() )
      return detail::cmd_bench( json, model, out );
    if ( table_cmd->parsed() )
      return detail::cmd_table( input, out );
    return detail::cmd_simplify( input, explain, out );
  }
  catch ( error const& e )
  {
    err << "error: " << e.what() << '\n';
    switch ( e.kind() )
    {
    case error_kind::input:
      return exit_input;
    case error_kind::verification:
      return exit_verification;
    default:
      return exit_internal;
    }
  }
  catch ( std::exception const& e )
  {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

} // namespace tqs
