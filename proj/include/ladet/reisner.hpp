// Reisner's criterion over GF(p).
//
// The Stanley-Reisner complex of a squarefree monomial ideal has one
// vertex per variable; a set of vertices is a face when no generator's
// support is contained in it. The quotient is Cohen-Macaulay over K
// exactly when every face link, the empty face included, has vanishing
// reduced homology below its dimension. Links are computed explicitly
// and homology ranks come from Gaussian elimination on the boundary
// matrices.
//
// Variables outside every generator cone the complex and cannot change
// the verdict, so they are stripped before the face enumeration.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ladet/field.hpp"
#include "ladet/groebner.hpp"

namespace ladet {

constexpr int kDefaultReisnerCap = 14;

namespace detail {

using Face = std::vector<int>;  // sorted vertex list

inline int matrix_rank_mod_p(std::vector<std::vector<Fp>>& a) {
    int rank = 0;
    if (a.empty()) return 0;
    const std::size_t cols = a.front().size();
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[rank], a[piv]);
        Fp inv = a[rank][col].inverse();
        for (std::size_t c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || a[r][col].is_zero()) continue;
            Fp f = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] = a[r][c] - f * a[rank][c];
        }
        ++rank;
        if (static_cast<std::size_t>(rank) == a.size()) break;
    }
    return rank;
}

// Reduced homology of an abstract complex given as the full face list
// (without the empty face). Returns dim H~_i for i = -1 .. dim complex.
inline std::map<int, int> reduced_homology(const std::vector<Face>& faces, std::uint32_t p) {
    std::map<int, std::vector<Face>> by_dim;  // i -> faces of dimension i
    for (const Face& f : faces) by_dim[static_cast<int>(f.size()) - 1].push_back(f);
    for (auto& [d, list] : by_dim) std::sort(list.begin(), list.end());

    int top = faces.empty() ? -1 : by_dim.rbegin()->first;
    std::map<int, int> hom;
    if (faces.empty()) {
        hom[-1] = 1;  // the complex {<>} has one reduced class in degree -1
        return hom;
    }

    auto chain_dim = [&](int i) -> int {
        if (i == -1) return 1;  // the empty face spans C_{-1}
        auto it = by_dim.find(i);
        return it == by_dim.end() ? 0 : static_cast<int>(it->second.size());
    };

    // rank of the boundary map C_i -> C_{i-1}
    auto boundary_rank = [&](int i) -> int {
        if (i < 0 || chain_dim(i) == 0 || chain_dim(i - 1) == 0) return 0;
        if (i == 0) return 1;  // augmentation map onto K is onto once a vertex exists
        const auto& rows = by_dim.at(i);
        const auto& cols_faces = by_dim.at(i - 1);
        std::map<Face, int> col_index;
        for (std::size_t c = 0; c < cols_faces.size(); ++c) col_index[cols_faces[c]] = static_cast<int>(c);
        std::vector<std::vector<Fp>> mat(rows.size(), std::vector<Fp>(cols_faces.size(), Fp(0, p)));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Face& f = rows[r];
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face sub;
                for (std::size_t l = 0; l < f.size(); ++l)
                    if (l != drop) sub.push_back(f[l]);
                mat[r][col_index.at(sub)] = Fp(drop % 2 == 0 ? 1 : -1, p);
            }
        }
        return matrix_rank_mod_p(mat);
    };

    std::map<int, int> brank;
    for (int i = 0; i <= top + 1; ++i) brank[i] = boundary_rank(i);
    for (int i = -1; i <= top; ++i) {
        int kernel = (i == -1) ? 1 : chain_dim(i) - brank[i];
        int image = (i + 1 <= top + 1) ? brank[i + 1] : 0;
        hom[i] = kernel - image;
    }
    return hom;
}

} // namespace detail

// Cohen-Macaulay test for R/I via Reisner's criterion. I must be
// squarefree; num_vars is the ambient variable count and is capped
// because the face enumeration is exponential.
inline bool reisner_cm_check(const MonomialIdeal& I, int num_vars, std::uint32_t p,
                             int cap = kDefaultReisnerCap) {
    if (num_vars > cap) throw BudgetExceeded("reisner: variable cap exceeded");
    std::set<Cell> support;
    for (const Monomial& g : I.min_gens) {
        if (!g.squarefree()) throw std::invalid_argument("reisner: generators must be squarefree");
        if (g.is_unit()) throw std::invalid_argument("reisner: unit ideal");
        for (const auto& f : g.factors()) support.insert(f.first);
    }

    // vertices = support variables only; cone points are CM-neutral
    std::vector<Cell> verts(support.begin(), support.end());
    const int nv = static_cast<int>(verts.size());
    std::vector<std::vector<int>> gen_supports;
    for (const Monomial& g : I.min_gens) {
        std::vector<int> s;
        for (const auto& f : g.factors())
            s.push_back(static_cast<int>(std::lower_bound(verts.begin(), verts.end(), f.first) -
                                         verts.begin()));
        std::sort(s.begin(), s.end());
        gen_supports.push_back(s);
    }

    // enumerate all faces
    std::vector<detail::Face> faces;
    for (unsigned long mask = 0; mask < (1ul << nv); ++mask) {
        detail::Face f;
        for (int v = 0; v < nv; ++v)
            if (mask & (1ul << v)) f.push_back(v);
        bool blocked = false;
        for (const auto& s : gen_supports) {
            if (std::includes(f.begin(), f.end(), s.begin(), s.end())) { blocked = true; break; }
        }
        if (!blocked && !f.empty()) faces.push_back(f);
    }
    std::sort(faces.begin(), faces.end());

    // links: for each face F (including the empty face), the faces G
    // disjoint from F with G union F still a face
    std::set<detail::Face> face_set(faces.begin(), faces.end());
    std::vector<detail::Face> all_with_empty = faces;
    all_with_empty.push_back({});

    for (const detail::Face& F : all_with_empty) {
        std::vector<detail::Face> link;
        int link_dim = -1;
        for (const detail::Face& G : faces) {
            detail::Face merged;
            std::set_union(F.begin(), F.end(), G.begin(), G.end(), std::back_inserter(merged));
            if (merged.size() != F.size() + G.size()) continue;  // not disjoint
            if (!face_set.count(merged)) continue;
            link.push_back(G);
            link_dim = std::max(link_dim, static_cast<int>(G.size()) - 1);
        }
        std::map<int, int> hom = detail::reduced_homology(link, p);
        for (const auto& [deg, rank] : hom)
            if (deg < link_dim && rank != 0) return false;
    }
    return true;
}

} // namespace ladet
