// Small finite fields GF(q).
//
// An element is stored as its coefficient code c0 + c1 p + c2 p^2 + ...
// with respect to the polynomial basis modulo a fixed irreducible
// polynomial, so 0 and 1 have codes 0 and 1 and the prime field is
// {0, ..., p-1}. Arithmetic is by lookup table.
//
// Elements are also enumerated by index: index 0 is zero and index j >= 1 is
// the (j-1)-th power of the fixed multiplicative generator.

#ifndef UTG_FINITE_FIELD_HPP_
#define UTG_FINITE_FIELD_HPP_

#include <cstddef>
#include <vector>

namespace utg {

  class FiniteField {
   public:
    using Element = unsigned;

    // q must be a prime <= 64 or one of 4, 8, 9, 16, 25, 27, 32, 49, 64.
    explicit FiniteField(unsigned q);

    unsigned order() const noexcept { return q_; }
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }

    Element add(Element a, Element b) const { return add_[a * q_ + b]; }
    Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element inv(Element a) const;  // throws on zero
    Element pow(Element a, unsigned e) const;
    // x -> x^p
    Element frobenius(Element a) const { return frob_[a]; }

    Element generator() const noexcept { return gen_; }
    // Multiplicative order; 0 for zero.
    unsigned multiplicative_order(Element a) const;

    Element element(std::size_t index) const { return by_index_[index]; }
    std::size_t index_of(Element a) const { return index_[a]; }

    // Exhaustive check of the field axioms and the generator. Throws Error on
    // the first failure.
    void self_test() const;

   private:
    unsigned q_, p_, k_;
    Element gen_ = 1;
    std::vector<Element> add_, mul_, neg_, frob_;
    std::vector<Element> by_index_;
    std::vector<std::size_t> index_;
  };

  bool is_prime(unsigned n);

}  // namespace utg

#endif  // UTG_FINITE_FIELD_HPP_
