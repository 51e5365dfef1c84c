#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <memory>
#include <string>
#include <vector>

namespace octlab {

// One signed basis triplet: i_a i_b = sign * i_c, extended cyclically
// (even permutations keep the sign, odd permutations flip it).
struct SignedTriplet {
    int a = 0;
    int b = 0;
    int c = 0;
    int sign = +1;

    bool operator==(const SignedTriplet&) const = default;
};

class StructureTable;
using TablePtr = std::shared_ptr<const StructureTable>;

// Multiplication rule of a 2-, 4- or 8-dimensional composition-algebra
// candidate, given by its list of signed triplets. Immutable once built;
// the dense basis product arrays are precomputed at construction.
class StructureTable {
  public:
    static TablePtr make(int dim, std::string id, std::vector<SignedTriplet> triplets);

    int dim() const { return dim_; }
    const std::string& id() const { return id_; }
    const std::vector<SignedTriplet>& triplets() const { return triplets_; }

    // basis product i_mu i_nu = product_sign(mu,nu) * i_{product_index(mu,nu)}
    int product_sign(int mu, int nu) const { return sign_[mu][nu]; }
    int product_index(int mu, int nu) const { return index_[mu][nu]; }

    bool same_rule(const StructureTable& other) const;

    // Text codec: header `dim=<d> id=<label>`, then one `mu nu rho s` line
    // per triplet with s in {+1,-1}.
    std::string to_text() const;
    static TablePtr from_text(std::istream& in);
    static TablePtr from_text(const std::string& text);

  private:
    StructureTable() = default;

    int dim_ = 0;
    std::string id_;
    std::vector<SignedTriplet> triplets_;
    std::array<std::array<std::int8_t, 8>, 8> sign_{};
    std::array<std::array<std::uint8_t, 8>, 8> index_{};
};

inline bool same_table(const StructureTable& a, const StructureTable& b) {
    return &a == &b || a.same_rule(b);
}

}  // namespace octlab
