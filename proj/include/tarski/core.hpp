#ifndef TARSKI_CORE_HPP
#define TARSKI_CORE_HPP

// Generic operators over a Boolean inverse meet-monoid.
//
// An instance type M exposes the primitive contract (multiply, inverse,
// zero, one, equals, is_idempotent, complement, raw_meet, raw_join); every
// derived operator below is written once against that contract and is
// shared by the finite instances and the Cuntz monoids.
//
// Product convention: multiply(s, t) applies t first, then s.

#include <concepts>
#include <utility>
#include <vector>

#include "tarski/error.hpp"

namespace tarski {

template<typename M>
concept BooleanInverseMonoid =
  requires(M const& m, typename M::element_type const& a, typename M::element_type const& b) {
    typename M::element_type;
    { m.multiply(a, b) } -> std::same_as<typename M::element_type>;
    { m.inverse(a) } -> std::same_as<typename M::element_type>;
    { m.zero() } -> std::convertible_to<typename M::element_type>;
    { m.one() } -> std::convertible_to<typename M::element_type>;
    { m.equals(a, b) } -> std::convertible_to<bool>;
    { m.is_idempotent(a) } -> std::convertible_to<bool>;
    { m.complement(a) } -> std::same_as<typename M::element_type>;
    { m.raw_meet(a, b) } -> std::same_as<typename M::element_type>;
    { m.raw_join(a, b) } -> std::same_as<typename M::element_type>;
  };

template<BooleanInverseMonoid M>
using element_of = typename M::element_type;

template<BooleanInverseMonoid M>
element_of<M> multiply(M const& m, element_of<M> const& s, element_of<M> const& t)
{
  return m.multiply(s, t);
}

template<BooleanInverseMonoid M>
element_of<M> multiply(M const& m, element_of<M> const& s, element_of<M> const& t,
                       element_of<M> const& u)
{
  return m.multiply(m.multiply(s, t), u);
}

/// d(s) = s^-1 s
template<BooleanInverseMonoid M>
element_of<M> domain(M const& m, element_of<M> const& s)
{
  return m.multiply(m.inverse(s), s);
}

/// r(s) = s s^-1
template<BooleanInverseMonoid M>
element_of<M> range(M const& m, element_of<M> const& s)
{
  return m.multiply(s, m.inverse(s));
}

template<BooleanInverseMonoid M>
bool is_zero(M const& m, element_of<M> const& s)
{
  return m.equals(s, m.zero());
}

template<BooleanInverseMonoid M>
bool is_one(M const& m, element_of<M> const& s)
{
  return m.equals(s, m.one());
}

/// Natural partial order: s <= t iff s = t d(s).
template<BooleanInverseMonoid M>
bool leq(M const& m, element_of<M> const& s, element_of<M> const& t)
{
  return m.equals(s, m.multiply(t, domain(m, s)));
}

template<BooleanInverseMonoid M>
bool compatible(M const& m, element_of<M> const& s, element_of<M> const& t)
{
  return m.is_idempotent(m.multiply(s, m.inverse(t)))
      && m.is_idempotent(m.multiply(m.inverse(s), t));
}

template<BooleanInverseMonoid M>
bool orthogonal(M const& m, element_of<M> const& s, element_of<M> const& t)
{
  return is_zero(m, m.multiply(s, m.inverse(t))) && is_zero(m, m.multiply(m.inverse(s), t));
}

template<BooleanInverseMonoid M>
element_of<M> meet(M const& m, element_of<M> const& s, element_of<M> const& t)
{
  return m.raw_meet(s, t);
}

template<BooleanInverseMonoid M>
element_of<M> join(M const& m, element_of<M> const& s, element_of<M> const& t)
{
  if (!compatible(m, s, t))
    throw Error(ErrorKind::incompatible, "join of incompatible elements does not exist");
  return m.raw_join(s, t);
}

/// Join of a finite compatible family; the empty join is zero.
template<BooleanInverseMonoid M>
element_of<M> join_all(M const& m, std::vector<element_of<M>> const& parts)
{
  element_of<M> acc = m.zero();
  for (auto const& p : parts)
    acc = join(m, acc, p);
  return acc;
}

/// Complement in the Boolean algebra of idempotents.
template<BooleanInverseMonoid M>
element_of<M> complement(M const& m, element_of<M> const& e)
{
  return m.complement(e);
}

/// Fixed-point operator phi(s) = s meet 1.
template<BooleanInverseMonoid M>
element_of<M> phi(M const& m, element_of<M> const& s)
{
  return m.raw_meet(s, m.one());
}

/// Support operator sigma(s) = complement(phi(s)) d(s).
template<BooleanInverseMonoid M>
element_of<M> sigma(M const& m, element_of<M> const& s)
{
  return m.multiply(m.complement(phi(m, s)), domain(m, s));
}

/// s = phi(s) join s sigma(s), an orthogonal join.
template<BooleanInverseMonoid M>
std::pair<element_of<M>, element_of<M>> cooper_decompose(M const& m, element_of<M> const& s)
{
  return {phi(m, s), m.multiply(s, sigma(m, s))};
}

template<BooleanInverseMonoid M>
bool is_unit(M const& m, element_of<M> const& s)
{
  return is_one(m, domain(m, s)) && is_one(m, range(m, s));
}

template<BooleanInverseMonoid M>
bool is_involution(M const& m, element_of<M> const& s)
{
  return is_unit(m, s) && is_one(m, m.multiply(s, s));
}

template<BooleanInverseMonoid M>
bool is_infinitesimal(M const& m, element_of<M> const& s)
{
  return !is_zero(m, s) && is_zero(m, m.multiply(s, s));
}

/// [g, h] = g h g^-1 h^-1
template<BooleanInverseMonoid M>
element_of<M> commutator(M const& m, element_of<M> const& g, element_of<M> const& h)
{
  if (!is_unit(m, g) || !is_unit(m, h))
    throw Error(ErrorKind::not_a_unit, "commutator is only defined on units");
  return m.multiply(m.multiply(g, h), m.multiply(m.inverse(g), m.inverse(h)));
}

/// d(s) = r(t), so that s t is a restricted product.
template<BooleanInverseMonoid M>
bool is_restricted_product(M const& m, element_of<M> const& s, element_of<M> const& t)
{
  return m.equals(domain(m, s), range(m, t));
}

/// For d(s) = r(s), the unit s join complement(d(s)) lying above s.
template<BooleanInverseMonoid M>
element_of<M> unit_from_balanced(M const& m, element_of<M> const& s)
{
  auto const e = domain(m, s);
  if (!m.equals(e, range(m, s)))
    throw Error(ErrorKind::not_balanced, "domain and range idempotents differ");
  return m.raw_join(s, m.complement(e));
}

/// For an infinitesimal a, the non-trivial involution a^-1 join a join e
/// where e is the complement of d(a) join r(a).
template<BooleanInverseMonoid M>
element_of<M> involution_from_infinitesimal(M const& m, element_of<M> const& a)
{
  if (!is_infinitesimal(m, a))
    throw Error(ErrorKind::not_infinitesimal, "element is zero or squares to a non-zero element");
  auto const rest = m.multiply(m.complement(domain(m, a)), m.complement(range(m, a)));
  return m.raw_join(m.raw_join(m.inverse(a), a), rest);
}

} // namespace tarski

#endif
