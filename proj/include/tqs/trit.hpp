/*!
  \file trit.hpp
  \brief Scalar algebra over {0,1,2}

  GF(3) arithmetic, ternary min/max logic, the cyclic NOT, the four
  projection families and the six affine shift permutations.
*/

#pragma once

#include "error.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tqs
{

/*! \brief A value in {0,1,2}.
 *
 * The raw constructor rejects anything else; arithmetic results go through
 * `trit::mod3`, which reduces explicitly.
 */
class trit
{
public:
  constexpr trit() noexcept = default;

  constexpr explicit trit( int v ) : _value( check( v ) ) {}

  /*! \brief Reduces any integer (including negatives) mod 3. */
  [[nodiscard]] static constexpr trit mod3( long long v ) noexcept
  {
    auto r = static_cast<int>( v % 3 );
    if ( r < 0 )
    {
      r += 3;
    }
    trit t;
    t._value = static_cast<std::uint8_t>( r );
    return t;
  }

  [[nodiscard]] constexpr int value() const noexcept { return _value; }
  [[nodiscard]] constexpr char to_char() const noexcept { return static_cast<char>( '0' + _value ); }

  friend constexpr bool operator==( trit, trit ) noexcept = default;
  friend constexpr auto operator<=>( trit, trit ) noexcept = default;

private:
  static constexpr std::uint8_t check( int v )
  {
    if ( v < 0 || v > 2 )
    {
      throw input_error( "value " + std::to_string( v ) + " is not a trit" );
    }
    return static_cast<std::uint8_t>( v );
  }

  std::uint8_t _value{ 0 };
};

inline std::ostream& operator<<( std::ostream& os, trit t ) { return os << t.to_char(); }

inline constexpr std::array<trit, 3> all_trits{ trit( 0 ), trit( 1 ), trit( 2 ) };

/* ternary logic */

[[nodiscard]] constexpr trit t_and( trit a, trit b ) noexcept { return a <= b ? a : b; }
[[nodiscard]] constexpr trit t_or( trit a, trit b ) noexcept { return a >= b ? a : b; }

/*! \brief Cyclic increment; NOT(NOT(NOT(a))) == a. */
[[nodiscard]] constexpr trit t_not( trit a ) noexcept { return trit::mod3( a.value() + 1 ); }

/* GF(3) */

[[nodiscard]] constexpr trit gf3_add( trit a, trit b ) noexcept { return trit::mod3( a.value() + b.value() ); }
[[nodiscard]] constexpr trit gf3_sub( trit a, trit b ) noexcept { return trit::mod3( a.value() - b.value() ); }
[[nodiscard]] constexpr trit gf3_mul( trit a, trit b ) noexcept { return trit::mod3( a.value() * b.value() ); }

/*! \brief Successor level i+k (mod 3). */
[[nodiscard]] constexpr trit level_plus( trit i, int k ) noexcept { return trit::mod3( i.value() + k ); }

/* projection operations */

enum class proj_family : std::uint8_t
{
  L,
  J,
  L_prime,
  J_prime
};

inline constexpr std::array<proj_family, 4> all_proj_families{ proj_family::L, proj_family::J, proj_family::L_prime,
                                                               proj_family::J_prime };

[[nodiscard]] constexpr bool is_primed( proj_family f ) noexcept
{
  return f == proj_family::L_prime || f == proj_family::J_prime;
}

/*! \brief L and L' fire with 1, J and J' with 2. */
[[nodiscard]] constexpr trit family_value( proj_family f ) noexcept
{
  return ( f == proj_family::L || f == proj_family::L_prime ) ? trit( 1 ) : trit( 2 );
}

[[nodiscard]] constexpr proj_family primed( proj_family f ) noexcept
{
  switch ( f )
  {
  case proj_family::L:
    return proj_family::L_prime;
  case proj_family::J:
    return proj_family::J_prime;
  default:
    return f;
  }
}

[[nodiscard]] constexpr proj_family unprimed( proj_family f ) noexcept
{
  switch ( f )
  {
  case proj_family::L_prime:
    return proj_family::L;
  case proj_family::J_prime:
    return proj_family::J;
  default:
    return f;
  }
}

[[nodiscard]] constexpr std::string_view family_name( proj_family f ) noexcept
{
  switch ( f )
  {
  case proj_family::L:
    return "L";
  case proj_family::J:
    return "J";
  case proj_family::L_prime:
    return "L'";
  case proj_family::J_prime:
    return "J'";
  }
  return "?";
}

/*! \brief Projection `family_level(a)`.
 *
 * L_i(a) = 1 iff a = i, J_i(a) = 2 iff a = i, the primed variants fire iff
 * a != i; all of them are 0 otherwise.
 */
[[nodiscard]] constexpr trit proj( proj_family family, trit level, trit a ) noexcept
{
  bool const fires = is_primed( family ) ? ( a != level ) : ( a == level );
  return fires ? family_value( family ) : trit( 0 );
}

/* shift operations */

/*! \brief The affine permutation x -> (mult * x + add) mod 3 with mult != 0. */
class shift_op
{
public:
  constexpr shift_op() noexcept = default;

  constexpr shift_op( trit mult, trit add ) : _mult( check_mult( mult ) ), _add( add ) {}
  constexpr shift_op( int mult, int add ) : shift_op( trit( mult ), trit( add ) ) {}

  [[nodiscard]] constexpr trit mult() const noexcept { return _mult; }
  [[nodiscard]] constexpr trit add() const noexcept { return _add; }

  [[nodiscard]] constexpr trit operator()( trit x ) const noexcept
  {
    return trit::mod3( _mult.value() * x.value() + _add.value() );
  }

  [[nodiscard]] constexpr bool is_identity() const noexcept { return _mult == trit( 1 ) && _add == trit( 0 ); }

  friend constexpr bool operator==( shift_op, shift_op ) noexcept = default;
  friend constexpr auto operator<=>( shift_op, shift_op ) noexcept = default;

private:
  static constexpr trit check_mult( trit m )
  {
    if ( m == trit( 0 ) )
    {
      throw input_error( "shift multiplier must be 1 or 2" );
    }
    return m;
  }

  trit _mult{ 1 };
  trit _add{ 0 };
};

inline constexpr shift_op buffer{ 1, 0 };
inline constexpr shift_op single_shift{ 1, 1 };
inline constexpr shift_op dual_shift{ 1, 2 };
inline constexpr shift_op self_shift{ 2, 0 };
inline constexpr shift_op self_single_shift{ 2, 1 };
inline constexpr shift_op self_dual_shift{ 2, 2 };

inline constexpr std::array<shift_op, 6> all_shifts{ buffer,     single_shift,      dual_shift,
                                                     self_shift, self_single_shift, self_dual_shift };

[[nodiscard]] constexpr trit shift_apply( shift_op s, trit x ) noexcept { return s( x ); }

/*! \brief `compose(outer, inner)(x) == outer(inner(x))`. */
[[nodiscard]] constexpr shift_op compose( shift_op outer, shift_op inner ) noexcept
{
  auto const m = gf3_mul( outer.mult(), inner.mult() );
  auto const a = gf3_add( gf3_mul( outer.mult(), inner.add() ), outer.add() );
  return shift_op( m, a );
}

/* mult is its own inverse in GF(3) */
[[nodiscard]] constexpr shift_op inverse( shift_op s ) noexcept
{
  return shift_op( s.mult(), trit::mod3( -s.mult().value() * s.add().value() ) );
}

[[nodiscard]] constexpr std::string_view shift_name( shift_op s ) noexcept
{
  constexpr std::array<std::string_view, 6> names{ "buffer",     "single-shift",      "dual-shift",
                                                   "self-shift", "self-single-shift", "self-dual-shift" };
  return names[( s.mult().value() - 1 ) * 3 + s.add().value()];
}

/* compact form used in netlist text dumps: x, x+1, x+2, 2x, 2x+1, 2x+2 */
[[nodiscard]] inline std::string shift_formula( shift_op s )
{
  std::string out = s.mult() == trit( 1 ) ? "x" : "2x";
  if ( s.add() != trit( 0 ) )
  {
    out += "+";
    out += s.add().to_char();
  }
  return out;
}

} // namespace tqs
