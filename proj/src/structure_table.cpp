#include "octlab/structure_table.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octlab {

namespace {

int expected_triplet_count(int dim) {
    switch (dim) {
        case 2: return 0;
        case 4: return 1;
        case 8: return 7;
        default: return -1;
    }
}

}  // namespace

TablePtr StructureTable::make(int dim, std::string id, std::vector<SignedTriplet> triplets) {
    const int want = expected_triplet_count(dim);
    if (want < 0) {
        throw std::invalid_argument("structure table dim must be 2, 4 or 8");
    }
    if (static_cast<int>(triplets.size()) != want) {
        throw std::invalid_argument("structure table for dim " + std::to_string(dim) +
                                    " needs exactly " + std::to_string(want) + " triplets");
    }

    auto table = std::shared_ptr<StructureTable>(new StructureTable());
    table->dim_ = dim;
    table->id_ = std::move(id);
    table->triplets_ = std::move(triplets);

    // 1*x = x*1 = x, i_mu^2 = -1; triplets fill the rest.
    for (int k = 0; k < 8; ++k) {
        table->sign_[0][k] = table->sign_[k][0] = 1;
        table->index_[0][k] = table->index_[k][0] = static_cast<std::uint8_t>(k);
    }
    for (int k = 1; k < dim; ++k) {
        table->sign_[k][k] = -1;
        table->index_[k][k] = 0;
    }

    std::set<std::pair<int, int>> covered;
    for (const auto& t : table->triplets_) {
        for (int idx : {t.a, t.b, t.c}) {
            if (idx < 1 || idx >= dim) {
                throw std::invalid_argument("triplet index out of range 1.." +
                                            std::to_string(dim - 1));
            }
        }
        if (t.a == t.b || t.b == t.c || t.a == t.c) {
            throw std::invalid_argument("triplet indices must be distinct");
        }
        if (t.sign != 1 && t.sign != -1) {
            throw std::invalid_argument("triplet sign must be +1 or -1");
        }
        const std::array<std::array<int, 3>, 3> cyc = {{{t.a, t.b, t.c}, {t.b, t.c, t.a}, {t.c, t.a, t.b}}};
        for (const auto& [x, y, z] : cyc) {
            auto key = std::minmax(x, y);
            if (!covered.insert({key.first, key.second}).second) {
                throw std::invalid_argument("basis pair appears in more than one triplet");
            }
            table->sign_[x][y] = static_cast<std::int8_t>(t.sign);
            table->sign_[y][x] = static_cast<std::int8_t>(-t.sign);
            table->index_[x][y] = table->index_[y][x] = static_cast<std::uint8_t>(z);
        }
    }
    const int pairs = (dim - 1) * (dim - 2) / 2;
    if (static_cast<int>(covered.size()) != pairs) {
        throw std::invalid_argument("triplets must cover every imaginary basis pair exactly once");
    }
    return table;
}

bool StructureTable::same_rule(const StructureTable& other) const {
    return dim_ == other.dim_ && sign_ == other.sign_ && index_ == other.index_;
}

std::string StructureTable::to_text() const {
    std::ostringstream out;
    out << "dim=" << dim_ << " id=" << id_ << '\n';
    for (const auto& t : triplets_) {
        out << t.a << ' ' << t.b << ' ' << t.c << ' ' << (t.sign > 0 ? "+1" : "-1") << '\n';
    }
    return out.str();
}

TablePtr StructureTable::from_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw std::invalid_argument("table codec: missing header line");
    }
    int dim = 0;
    std::string id;
    {
        std::istringstream hs(header);
        std::string dim_field, id_field;
        hs >> dim_field >> id_field;
        if (dim_field.rfind("dim=", 0) != 0 || id_field.rfind("id=", 0) != 0) {
            throw std::invalid_argument("table codec: header must be `dim=<d> id=<label>`");
        }
        dim = std::stoi(dim_field.substr(4));
        id = id_field.substr(3);
    }
    std::vector<SignedTriplet> triplets;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        SignedTriplet t;
        if (!(ls >> t.a >> t.b >> t.c >> t.sign)) {
            throw std::invalid_argument("table codec: bad triplet line `" + line + "`");
        }
        triplets.push_back(t);
    }
    return make(dim, id, std::move(triplets));
}

TablePtr StructureTable::from_text(const std::string& text) {
    std::istringstream in(text);
    return from_text(in);
}

}  // namespace octlab
