/*!
  \file error.hpp
  \brief Exception types shared by the library and the CLI
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tqs
{

/*! \brief Broad error classes; the CLI maps them onto exit codes. */
enum class error_kind
{
  input,        /* malformed or mismatched user input (exit 2) */
  verification, /* a circuit failed the exhaustive oracle (exit 3) */
  internal      /* broken invariant inside the library (exit 1) */
};

class error : public std::runtime_error
{
public:
  error( error_kind kind, std::string const& what )
      : std::runtime_error( what ), _kind( kind )
  {
  }

  [[nodiscard]] error_kind kind() const noexcept { return _kind; }

private:
  error_kind _kind;
};

/*! \brief Input error with a 1-based source position. */
class parse_error : public error
{
public:
  parse_error( std::size_t line, std::size_t column, std::string const& msg )
      : error( error_kind::input, "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + msg ),
        _line( line ), _column( column )
  {
  }

  [[nodiscard]] std::size_t line() const noexcept { return _line; }
  [[nodiscard]] std::size_t column() const noexcept { return _column; }

private:
  std::size_t _line;
  std::size_t _column;
};

inline error input_error( std::string const& msg ) { return error( error_kind::input, msg ); }
inline error internal_error( std::string const& msg ) { return error( error_kind::internal, msg ); }

} // namespace tqs
