/*!
  \file truth_table.hpp
  \brief Dense ternary truth tables, benchmark builders and GF(3)-linearity detection

  Rows are indexed lexicographically with the first variable most
  significant, i.e. input (a, b) lives at index 3a + b.
*/

#pragma once

#include "error.hpp"
#include "trit.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tqs
{

/* 3^12 = 531441 rows; anything larger is not a sensible dense table */
inline constexpr std::size_t max_arity = 12;

[[nodiscard]] constexpr std::size_t pow3( std::size_t m ) noexcept
{
  std::size_t r = 1;
  for ( std::size_t i = 0; i < m; ++i )
  {
    r *= 3;
  }
  return r;
}

[[nodiscard]] inline std::size_t lex_index( std::span<trit const> input ) noexcept
{
  std::size_t idx = 0;
  for ( auto t : input )
  {
    idx = idx * 3 + static_cast<std::size_t>( t.value() );
  }
  return idx;
}

[[nodiscard]] inline std::vector<trit> lex_input( std::size_t index, std::size_t arity )
{
  std::vector<trit> input( arity );
  for ( std::size_t i = arity; i-- > 0; )
  {
    input[i] = trit::mod3( static_cast<long long>( index % 3 ) );
    index /= 3;
  }
  return input;
}

/*! \brief Calls `fn(index, input)` for every input vector in lexicographic order. */
template<class Fn>
void for_each_input( std::size_t arity, Fn&& fn )
{
  std::vector<trit> input( arity );
  auto const rows = pow3( arity );
  for ( std::size_t idx = 0; idx < rows; ++idx )
  {
    fn( idx, std::as_const( input ) );
    for ( std::size_t i = arity; i-- > 0; )
    {
      if ( input[i] == trit( 2 ) )
      {
        input[i] = trit( 0 );
        continue;
      }
      input[i] = t_not( input[i] );
      break;
    }
  }
}

[[nodiscard]] inline std::string format_input( std::span<trit const> input )
{
  std::string s = "(";
  for ( std::size_t i = 0; i < input.size(); ++i )
  {
    if ( i != 0 )
    {
      s += ",";
    }
    s += input[i].to_char();
  }
  return s + ")";
}

[[nodiscard]] inline std::vector<std::string> default_var_names( std::size_t arity )
{
  std::vector<std::string> names;
  for ( std::size_t i = 0; i < arity; ++i )
  {
    names.push_back( i < 26 ? std::string( 1, static_cast<char>( 'a' + i ) ) : "x" + std::to_string( i ) );
  }
  return names;
}

/*! \brief A single-output ternary function stored as a dense table. */
class ternary_function
{
public:
  ternary_function( std::string name, std::vector<std::string> vars, std::vector<trit> outputs )
      : _name( std::move( name ) ), _vars( std::move( vars ) ), _outputs( std::move( outputs ) )
  {
    if ( _vars.empty() || _vars.size() > max_arity )
    {
      throw input_error( "function '" + _name + "': arity must be between 1 and " + std::to_string( max_arity ) );
    }
    for ( std::size_t i = 0; i < _vars.size(); ++i )
    {
      if ( std::find( _vars.begin() + i + 1, _vars.end(), _vars[i] ) != _vars.end() )
      {
        throw input_error( "function '" + _name + "': duplicate variable '" + _vars[i] + "'" );
      }
    }
    if ( _outputs.size() != pow3( _vars.size() ) )
    {
      throw input_error( "function '" + _name + "': expected " + std::to_string( pow3( _vars.size() ) ) +
                         " table entries, got " + std::to_string( _outputs.size() ) );
    }
  }

  /*! \brief Tabulates `fn` over all inputs with default variable names a, b, c, ... */
  static ternary_function from_formula( std::string name, std::size_t arity,
                                        std::function<trit( std::span<trit const> )> const& fn )
  {
    if ( arity == 0 || arity > max_arity )
    {
      throw input_error( "function '" + name + "': arity must be between 1 and " + std::to_string( max_arity ) );
    }
    std::vector<trit> out( pow3( arity ) );
    for_each_input( arity, [&]( std::size_t idx, std::vector<trit> const& in ) { out[idx] = fn( in ); } );
    return ternary_function( std::move( name ), default_var_names( arity ), std::move( out ) );
  }

  static ternary_function from_string( std::string name, std::size_t arity, std::string_view digits )
  {
    std::vector<trit> out;
    for ( char c : digits )
    {
      if ( c < '0' || c > '2' )
      {
        throw input_error( std::string( "invalid trit character '" ) + c + "'" );
      }
      out.emplace_back( c - '0' );
    }
    return ternary_function( std::move( name ), default_var_names( arity ), std::move( out ) );
  }

  [[nodiscard]] std::string const& name() const noexcept { return _name; }
  [[nodiscard]] std::vector<std::string> const& vars() const noexcept { return _vars; }
  [[nodiscard]] std::size_t arity() const noexcept { return _vars.size(); }
  [[nodiscard]] std::vector<trit> const& outputs() const noexcept { return _outputs; }

  [[nodiscard]] trit at( std::size_t index ) const { return _outputs.at( index ); }

  [[nodiscard]] trit eval( std::span<trit const> input ) const
  {
    if ( input.size() != arity() )
    {
      throw input_error( "function '" + _name + "' takes " + std::to_string( arity() ) + " inputs, got " +
                         std::to_string( input.size() ) );
    }
    return _outputs[lex_index( input )];
  }

  [[nodiscard]] std::string to_string() const
  {
    std::string s;
    s.reserve( _outputs.size() );
    for ( auto t : _outputs )
    {
      s += t.to_char();
    }
    return s;
  }

  [[nodiscard]] std::size_t nonzero_rows() const noexcept
  {
    return static_cast<std::size_t>( std::count_if( _outputs.begin(), _outputs.end(), []( trit t ) { return t != trit( 0 ); } ) );
  }

  void rename( std::string name ) { _name = std::move( name ); }

  friend bool operator==( ternary_function const& a, ternary_function const& b )
  {
    return a._vars == b._vars && a._outputs == b._outputs;
  }

private:
  std::string _name;
  std::vector<std::string> _vars;
  std::vector<trit> _outputs;
};

/*! \brief An ordered, non-empty list of functions over the same variables. */
class multi_output_function
{
public:
  multi_output_function( std::string name, std::vector<ternary_function> components )
      : _name( std::move( name ) ), _components( std::move( components ) )
  {
    if ( _components.empty() )
    {
      throw input_error( "function '" + _name + "' has no outputs" );
    }
    for ( auto const& c : _components )
    {
      if ( c.vars() != _components.front().vars() )
      {
        throw input_error( "function '" + _name + "': outputs disagree on their variables" );
      }
    }
  }

  /* implicit: a single function is a one-output function */
  multi_output_function( ternary_function f ) : multi_output_function( f.name(), { f } ) {}

  [[nodiscard]] std::string const& name() const noexcept { return _name; }
  [[nodiscard]] std::size_t arity() const noexcept { return _components.front().arity(); }
  [[nodiscard]] std::vector<std::string> const& vars() const noexcept { return _components.front().vars(); }
  [[nodiscard]] std::vector<ternary_function> const& outputs() const noexcept { return _components; }
  [[nodiscard]] std::size_t num_outputs() const noexcept { return _components.size(); }
  [[nodiscard]] ternary_function const& output( std::size_t i ) const { return _components.at( i ); }

private:
  std::string _name;
  std::vector<ternary_function> _components;
};

/* ---------------------------------------------------------------------------
 * GF(3)-linear functions
 * ------------------------------------------------------------------------- */

/*! \brief f(x) = (constant + sum coefficients[i] * x_i) mod 3 */
struct linear_form
{
  trit constant;
  std::vector<trit> coefficients;

  [[nodiscard]] trit eval( std::span<trit const> input ) const noexcept
  {
    long long s = constant.value();
    for ( std::size_t i = 0; i < input.size(); ++i )
    {
      s += coefficients[i].value() * input[i].value();
    }
    return trit::mod3( s );
  }

  friend bool operator==( linear_form const&, linear_form const& ) = default;
};

/*! \brief Returns the affine GF(3) form of `f`, if it has one.
 *
 * The only candidate is read off f(0) and the unit vectors; it is then
 * checked against every row.
 */
[[nodiscard]] inline std::optional<linear_form> linear_detect( ternary_function const& f )
{
  auto const m = f.arity();
  linear_form form{ f.at( 0 ), std::vector<trit>( m ) };
  std::size_t unit = 1;
  for ( std::size_t i = m; i-- > 0; )
  {
    form.coefficients[i] = gf3_sub( f.at( unit ), form.constant );
    unit *= 3;
  }

  bool ok = true;
  for_each_input( m, [&]( std::size_t idx, std::vector<trit> const& in ) {
    if ( ok && form.eval( in ) != f.at( idx ) )
    {
      ok = false;
    }
  } );
  if ( !ok )
  {
    return std::nullopt;
  }
  return form;
}

/* ---------------------------------------------------------------------------
 * Benchmark functions
 * ------------------------------------------------------------------------- */

namespace detail
{

/* Table columns, rows in lexicographic input order. */
inline constexpr std::string_view g_example_column = "012111212";
inline constexpr std::string_view mul2_column = "000012021";
inline constexpr std::string_view mul2c_column = "000000001";
inline constexpr std::string_view sumh_column = "012120201";
inline constexpr std::string_view carryh_column = "000001011";
inline constexpr std::string_view sqsum2_column = "011122122";
inline constexpr std::string_view avg2_column = "001011112";
inline constexpr std::string_view mul3_column = "000000000000012021000021012";
inline constexpr std::string_view mul3c_column = "000000000000000001000001012";
inline constexpr std::string_view a2bcc_column = "012021000120101111120102111";
inline constexpr std::string_view avg3_column = "000001011001011111011111112";
inline constexpr std::string_view sqsum3_column = "011122122122200200122200200";

inline long long sum_of( std::span<trit const> x )
{
  long long s = 0;
  for ( auto t : x )
  {
    s += t.value();
  }
  return s;
}

inline long long product_of( std::span<trit const> x )
{
  long long p = 1;
  for ( auto t : x )
  {
    p *= t.value();
  }
  return p;
}

/* parses "sum5" / "sum_5" style names */
inline std::optional<std::size_t> numbered( std::string_view name, std::string_view prefix )
{
  if ( !name.starts_with( prefix ) )
  {
    return std::nullopt;
  }
  auto rest = name.substr( prefix.size() );
  if ( rest.starts_with( '_' ) )
  {
    rest.remove_prefix( 1 );
  }
  if ( rest.empty() || rest.size() > 2 || !std::all_of( rest.begin(), rest.end(), []( char c ) { return std::isdigit( static_cast<unsigned char>( c ) ); } ) )
  {
    return std::nullopt;
  }
  return static_cast<std::size_t>( std::stoul( std::string( rest ) ) );
}

} // namespace detail

inline constexpr std::size_t min_chain_length = 2;
inline constexpr std::size_t max_chain_length = 7;

[[nodiscard]] inline ternary_function sum_n_function( std::size_t n )
{
  return ternary_function::from_formula( "sum" + std::to_string( n ), n, []( auto x ) { return trit::mod3( detail::sum_of( x ) ); } );
}

[[nodiscard]] inline ternary_function prod_n_function( std::size_t n )
{
  return ternary_function::from_formula( "prod" + std::to_string( n ), n, []( auto x ) { return trit::mod3( detail::product_of( x ) ); } );
}

/*! \brief Canonical names accepted by `builtin`. */
[[nodiscard]] inline std::vector<std::string> builtin_names()
{
  std::vector<std::string> names{ "g_example", "mul2", "thadd", "tfadd", "sqsum2", "avg2", "mul3", "a2bcc", "avg3", "sqsum3" };
  for ( std::size_t n = min_chain_length; n <= max_chain_length; ++n )
  {
    names.push_back( "sum" + std::to_string( n ) );
  }
  for ( std::size_t n = min_chain_length; n <= max_chain_length; ++n )
  {
    names.push_back( "prod" + std::to_string( n ) );
  }
  return names;
}

/*! \brief Looks up a benchmark function by name or returns nullopt.
 *
 * Functions that appear as table columns are built from the stored columns;
 * the tables are authoritative where a printed formula disagrees with them
 * (a2bcc at (1,1,2)). sum_n, prod_n and tfadd are built from arithmetic.
 * Besides the canonical names, single outputs (mul2c, sumh, carryh, mul3c)
 * and the `sum_5` spelling are accepted.
 */
[[nodiscard]] inline std::optional<multi_output_function> find_builtin( std::string_view name )
{
  using tf = ternary_function;
  auto col = []( char const* n, std::size_t m, std::string_view d ) { return tf::from_string( n, m, d ); };

  if ( name == "g_example" || name == "g" )
    return multi_output_function( "g_example", { col( "g", 2, detail::g_example_column ) } );
  if ( name == "mul2" )
    return multi_output_function( "mul2", { col( "mul2", 2, detail::mul2_column ), col( "mul2c", 2, detail::mul2c_column ) } );
  if ( name == "mul2c" )
    return multi_output_function( col( "mul2c", 2, detail::mul2c_column ) );
  if ( name == "thadd" )
    return multi_output_function( "thadd", { col( "sumh", 2, detail::sumh_column ), col( "carryh", 2, detail::carryh_column ) } );
  if ( name == "sumh" )
    return multi_output_function( col( "sumh", 2, detail::sumh_column ) );
  if ( name == "carryh" )
    return multi_output_function( col( "carryh", 2, detail::carryh_column ) );
  if ( name == "sqsum2" )
    return multi_output_function( col( "sqsum2", 2, detail::sqsum2_column ) );
  if ( name == "avg2" )
    return multi_output_function( col( "avg2", 2, detail::avg2_column ) );
  if ( name == "mul3" )
    return multi_output_function( "mul3", { col( "mul3", 3, detail::mul3_column ), col( "mul3c", 3, detail::mul3c_column ) } );
  if ( name == "mul3c" )
    return multi_output_function( col( "mul3c", 3, detail::mul3c_column ) );
  if ( name == "a2bcc" )
    return multi_output_function( col( "a2bcc", 3, detail::a2bcc_column ) );
  if ( name == "avg3" )
    return multi_output_function( col( "avg3", 3, detail::avg3_column ) );
  if ( name == "sqsum3" )
    return multi_output_function( col( "sqsum3", 3, detail::sqsum3_column ) );
  if ( name == "tfadd" )
  {
    auto sum = tf::from_formula( "sum", 3, []( auto x ) { return trit::mod3( detail::sum_of( x ) ); } );
    auto carry = tf::from_formula( "carry", 3, []( auto x ) { return trit::mod3( detail::sum_of( x ) / 3 ); } );
    return multi_output_function( "tfadd", { sum, carry } );
  }
  for ( auto [prefix, make] : { std::pair{ std::string_view( "sum" ), &sum_n_function }, std::pair{ std::string_view( "prod" ), &prod_n_function } } )
  {
    if ( auto n = detail::numbered( name, prefix ); n && *n >= min_chain_length && *n <= max_chain_length )
    {
      return multi_output_function( make( *n ) );
    }
  }
  return std::nullopt;
}

[[nodiscard]] inline multi_output_function builtin( std::string_view name )
{
  if ( auto f = find_builtin( name ) )
  {
    return *f;
  }
  throw input_error( "unknown builtin function '" + std::string( name ) + "'" );
}

/* ---------------------------------------------------------------------------
 * Text format
 *
 *   vars a b c
 *   outputs k
 *   <3^m trits> [name]      (k lines)
 *
 * Blank lines and lines starting with '#' are ignored.
 * ------------------------------------------------------------------------- */

[[nodiscard]] inline multi_output_function read_truth_table( std::istream& in, std::string const& name = "function" )
{
  std::string raw;
  std::size_t lineno = 0;

  /* next significant line, split into (column, token) pairs */
  auto next_line = [&]( std::vector<std::pair<std::size_t, std::string>>& tokens ) {
    while ( std::getline( in, raw ) )
    {
      ++lineno;
      if ( !raw.empty() && raw.back() == '\r' )
      {
        raw.pop_back();
      }
      tokens.clear();
      std::size_t i = 0;
      while ( i < raw.size() )
      {
        while ( i < raw.size() && std::isspace( static_cast<unsigned char>( raw[i] ) ) )
          ++i;
        std::size_t start = i;
        while ( i < raw.size() && !std::isspace( static_cast<unsigned char>( raw[i] ) ) )
          ++i;
        if ( i > start )
        {
          tokens.emplace_back( start + 1, raw.substr( start, i - start ) );
        }
      }
      if ( tokens.empty() || tokens.front().second.starts_with( '#' ) )
      {
        continue;
      }
      return true;
    }
    return false;
  };

  std::vector<std::pair<std::size_t, std::string>> tok;
  if ( !next_line( tok ) || tok.front().second != "vars" )
  {
    throw parse_error( lineno == 0 ? 1 : lineno, 1, "expected 'vars <names...>'" );
  }
  if ( tok.size() < 2 )
  {
    throw parse_error( lineno, raw.size() + 1, "'vars' needs at least one variable" );
  }
  std::vector<std::string> vars;
  for ( std::size_t i = 1; i < tok.size(); ++i )
  {
    auto const& v = tok[i].second;
    bool const ident = std::isalpha( static_cast<unsigned char>( v.front() ) ) &&
                       std::all_of( v.begin(), v.end(), []( char c ) { return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_'; } );
    if ( !ident )
    {
      throw parse_error( lineno, tok[i].first, "invalid variable name '" + v + "'" );
    }
    if ( std::find( vars.begin(), vars.end(), v ) != vars.end() )
    {
      throw parse_error( lineno, tok[i].first, "duplicate variable '" + v + "'" );
    }
    vars.push_back( v );
  }
  if ( vars.size() > max_arity )
  {
    throw parse_error( lineno, tok[1].first, "at most " + std::to_string( max_arity ) + " variables are supported" );
  }
  auto const vars_line = lineno;

  if ( !next_line( tok ) || tok.front().second != "outputs" )
  {
    throw parse_error( lineno == vars_line ? lineno + 1 : lineno, 1, "expected 'outputs <count>'" );
  }
  if ( tok.size() != 2 || !std::all_of( tok[1].second.begin(), tok[1].second.end(), []( char c ) { return std::isdigit( static_cast<unsigned char>( c ) ); } ) ||
       tok[1].second.size() > 4 )
  {
    throw parse_error( lineno, tok.size() > 1 ? tok[1].first : raw.size() + 1, "expected a positive output count" );
  }
  auto const count = std::stoul( tok[1].second );
  if ( count == 0 )
  {
    throw parse_error( lineno, tok[1].first, "output count must be positive" );
  }

  auto const rows = pow3( vars.size() );
  std::vector<ternary_function> outs;
  for ( std::size_t k = 0; k < count; ++k )
  {
    auto const prev = lineno;
    if ( !next_line( tok ) )
    {
      throw parse_error( prev + 1, 1, "expected " + std::to_string( count ) + " output lines, got " + std::to_string( k ) );
    }
    if ( tok.size() > 2 )
    {
      throw parse_error( lineno, tok[2].first, "unexpected token '" + tok[2].second + "'" );
    }
    auto const& digits = tok[0].second;
    std::vector<trit> column;
    for ( std::size_t i = 0; i < digits.size(); ++i )
    {
      if ( digits[i] < '0' || digits[i] > '2' )
      {
        throw parse_error( lineno, tok[0].first + i, std::string( "invalid trit character '" ) + digits[i] + "'" );
      }
      column.emplace_back( digits[i] - '0' );
    }
    if ( column.size() != rows )
    {
      throw parse_error( lineno, tok[0].first, "expected " + std::to_string( rows ) + " trits, got " + std::to_string( column.size() ) );
    }
    auto out_name = tok.size() == 2 ? tok[1].second : ( count == 1 ? name : name + std::to_string( k ) );
    outs.emplace_back( out_name, vars, std::move( column ) );
  }
  if ( next_line( tok ) )
  {
    throw parse_error( lineno, tok.front().first, "unexpected content after the last output" );
  }
  return multi_output_function( name, std::move( outs ) );
}

[[nodiscard]] inline multi_output_function parse_truth_table( std::string_view text, std::string const& name = "function" )
{
  std::istringstream in{ std::string( text ) };
  return read_truth_table( in, name );
}

inline void write_truth_table( std::ostream& os, multi_output_function const& f )
{
  os << "vars";
  for ( auto const& v : f.vars() )
  {
    os << ' ' << v;
  }
  os << "\noutputs " << f.num_outputs() << '\n';
  for ( auto const& out : f.outputs() )
  {
    os << out.to_string() << ' ' << out.name() << '\n';
  }
}

[[nodiscard]] inline std::string to_truth_table_text( multi_output_function const& f )
{
  std::ostringstream os;
  write_truth_table( os, f );
  return os.str();
}

} // namespace tqs
