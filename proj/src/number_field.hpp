#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "checked.hpp"

namespace covsys {

// Element of the ring of integers, as coordinates in the integral basis.
struct Elem {
    std::vector<i64> c;

    auto operator<=>(const Elem&) const = default;
};

std::string coordsText(const Elem& a);
std::ostream& operator<<(std::ostream& os, const Elem& a);

// A number field given abstractly by an integral basis and the integer
// multiplication table of its ring of integers: table[a][b] holds the
// coordinates of omega_a * omega_b. Basis element 0 is the identity.
//
// Construction validates identity, symmetry and associativity on all basis
// triples; degree-1 and quadratic constructors produce the standard bases.
class NumberField {
public:
    static std::shared_ptr<const NumberField> rationals();
    static std::shared_ptr<const NumberField> quadratic(i64 d);

    // Generic table constructor; validates the ring axioms on the basis.
    NumberField(std::vector<std::string> basisLabels,
                std::vector<std::vector<Elem>> multTable);

    std::size_t degree() const { return n_; }
    const std::string& basisLabel(std::size_t i) const { return labels_[i]; }
    const Elem& tableEntry(std::size_t a, std::size_t b) const { return table_[a][b]; }

    Elem zero() const;
    Elem one() const;
    Elem basisElem(std::size_t i) const;
    Elem fromInt(i64 k) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(i64 k, const Elem& a) const;

    bool isZero(const Elem& a) const;

    bool operator==(const NumberField& other) const;

private:
    void checkDims(const Elem& a) const;

    std::size_t n_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Elem>> table_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

} // namespace covsys
