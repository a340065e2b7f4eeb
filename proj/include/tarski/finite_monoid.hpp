#ifndef TARSKI_FINITE_MONOID_HPP
#define TARSKI_FINITE_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tarski/core.hpp"
#include "tarski/groupoid.hpp"
#include "tarski/partial_bijection.hpp"

namespace tarski {

/// A finite Boolean inverse meet-monoid with an enumerated carrier.
/// Elements are indices into the carrier; the concrete payload (partial
/// bijection, local bisection, pair of components) lives behind Model.
class FiniteMonoid {
public:
  using element_type = std::uint32_t;

  /// Payload-level operations of a concrete instance.
  class Model {
  public:
    virtual ~Model() = default;
    virtual std::size_t size() const = 0;
    virtual element_type multiply(element_type a, element_type b) const = 0;
    virtual element_type inverse(element_type a) const = 0;
    virtual element_type meet(element_type a, element_type b) const = 0;
    /// std::nullopt when the join does not exist
    virtual std::optional<element_type> join(element_type a, element_type b) const = 0;
    virtual element_type complement(element_type e) const = 0;
    virtual element_type zero() const = 0;
    virtual element_type one() const = 0;
    virtual std::string label(element_type a) const = 0;
    virtual std::optional<element_type> parse(std::string_view text) const = 0;
  };

  FiniteMonoid(std::string name, std::shared_ptr<Model const> model);

  std::string const& name() const { return name_; }
  std::size_t size() const { return size_; }

  element_type multiply(element_type a, element_type b) const;
  element_type inverse(element_type a) const { return inverse_[a]; }
  element_type zero() const { return zero_; }
  element_type one() const { return one_; }
  bool equals(element_type a, element_type b) const { return a == b; }
  bool is_idempotent(element_type a) const { return idempotent_[a]; }
  element_type complement(element_type e) const;
  element_type raw_meet(element_type a, element_type b) const { return model_->meet(a, b); }
  element_type raw_join(element_type a, element_type b) const;

  element_type domain(element_type a) const { return domain_[a]; }
  element_type range(element_type a) const { return range_[a]; }

  std::vector<element_type> const& idempotents() const { return idempotents_; }
  /// Minimal non-zero elements under the natural order.
  std::vector<element_type> const& atoms() const { return atoms_; }
  /// Atoms of the Boolean algebra of idempotents.
  std::vector<element_type> const& idempotent_atoms() const { return idempotent_atoms_; }
  std::vector<element_type> atoms_below(element_type s) const;

  std::string label(element_type a) const { return model_->label(a); }
  /// Parses an element in the instance's grammar; Error(parse_error) on failure.
  element_type parse(std::string_view text) const;

  std::vector<element_type> elements() const;
  Model const& model() const { return *model_; }

private:
  std::string name_;
  std::shared_ptr<Model const> model_;
  std::size_t size_;
  std::vector<element_type> table_; // size_^2 when tabulated, else empty
  std::vector<element_type> inverse_;
  std::vector<element_type> domain_;
  std::vector<element_type> range_;
  std::vector<bool> idempotent_;
  std::vector<element_type> idempotents_;
  std::vector<element_type> atoms_;
  std::vector<element_type> idempotent_atoms_;
  element_type zero_;
  element_type one_;
};

static_assert(BooleanInverseMonoid<FiniteMonoid>);

/// Carrier caps for enumeration-based instances.
inline constexpr std::size_t max_symmetric_degree = 6;
inline constexpr std::size_t max_bisection_arrows = 16;

/// I_n, the symmetric inverse monoid on {1..n}; Error(too_large) for n > 6.
FiniteMonoid symmetric_inverse_monoid(std::size_t n);
/// Componentwise direct product.
FiniteMonoid product(FiniteMonoid const& s, FiniteMonoid const& t);
/// B(G): all local bisections of a finite groupoid.
FiniteMonoid local_bisection_monoid(FiniteGroupoid const& g, std::string name = "B(G)");

/// The local bisection underlying an element of local_bisection_monoid,
/// as a sorted list of arrow indices; empty for instances of other kinds.
std::vector<std::size_t> bisection_arrows(FiniteMonoid const& m, FiniteMonoid::element_type a);

/// Parses `I<n>`, `prod:I<a>xI<b>` (any number of factors) or
/// `groupoid:<path>`.
FiniteMonoid finite_instance_from_spec(std::string_view spec);

} // namespace tarski

#endif
