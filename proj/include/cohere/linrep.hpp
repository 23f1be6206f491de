#pragma once

#include "cohere/groupoid.hpp"
#include "cohere/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cohere {

/**
 * \brief A functor from a finite groupoid to finite-dimensional vector spaces.
 *
 * mat[a] has shape dim[tgt a] x dim[src a].
 */
template <class S>
struct GroupoidRep {
    GroupoidPtr gpd;
    std::vector<std::size_t> dim;
    std::vector<Matrix<S>> mat;
    std::string name;

    friend bool operator==(const GroupoidRep& a, const GroupoidRep& b) {
        return a.gpd == b.gpd && a.dim == b.dim && a.mat == b.mat;
    }
};

template <class S>
using RepPtr = std::shared_ptr<const GroupoidRep<S>>;

/// Errors: DimMismatch(a), NotInvertible(a), NotFunctorial(a,b).
template <class S>
RepPtr<S> rep_validate(GroupoidPtr gpd, std::vector<std::size_t> dim, std::vector<Matrix<S>> mat, std::string name = "") {
    const auto& G = *gpd;
    if (dim.size() != G.num_objects()) fail("DimMismatch", "dimension table has wrong length");
    if (mat.size() != G.num_arrows()) fail("DimMismatch", "matrix table has wrong length");
    for (std::size_t a = 0; a < G.num_arrows(); ++a)
        if (mat[a].rows() != dim[G.tgt[a]] || mat[a].cols() != dim[G.src[a]]) fail("DimMismatch", G.arr_labels[a]);
    for (std::size_t a = 0; a < G.num_arrows(); ++a)
        if (!invertible(mat[a])) fail("NotInvertible", G.arr_labels[a]);
    for (std::size_t x = 0; x < G.num_objects(); ++x)
        if (!mat[G.id(x)].is_identity()) fail("NotFunctorial", G.arr_labels[G.id(x)]);
    for (std::size_t a = 0; a < G.num_arrows(); ++a)
        for (std::size_t b = 0; b < G.num_arrows(); ++b) {
            std::size_t ab = G.comp(a, b);
            if (ab != kNone && mat[ab] != mat[a] * mat[b]) fail("NotFunctorial", G.arr_labels[a] + "," + G.arr_labels[b]);
        }
    return std::make_shared<GroupoidRep<S>>(GroupoidRep<S>{std::move(gpd), std::move(dim), std::move(mat), std::move(name)});
}

/// Trivial rep: every space k^d, every arrow the identity.
template <class S>
RepPtr<S> trivial_rep(const GroupoidPtr& gpd, std::size_t d = 1, std::string name = "trivial") {
    std::vector<Matrix<S>> mat;
    for (std::size_t a = 0; a < gpd->num_arrows(); ++a) mat.push_back(Matrix<S>::identity(d));
    return rep_validate<S>(gpd, std::vector<std::size_t>(gpd->num_objects(), d), std::move(mat), std::move(name));
}

/// Zero-dimensional rep.
template <class S>
RepPtr<S> zero_rep(const GroupoidPtr& gpd) {
    return trivial_rep<S>(gpd, 0, "0");
}

/// Representation of a group, as a rep of its delooping; mats indexed by elements.
template <class S>
RepPtr<S> group_rep(const GroupoidPtr& bh, std::size_t d, std::vector<Matrix<S>> mats, std::string name = "") {
    if (bh->num_objects() != 1) fail("ValidationError", "group representations live on a one-object groupoid");
    return rep_validate<S>(bh, {d}, std::move(mats), std::move(name));
}

/**
 * \brief An equivariant family f_x: V_x -> V'_x.
 */
template <class S>
struct RepMorphism {
    RepPtr<S> src, dst;
    std::vector<Matrix<S>> comp;

    friend bool operator==(const RepMorphism& a, const RepMorphism& b) { return a.comp == b.comp; }
    friend bool operator!=(const RepMorphism& a, const RepMorphism& b) { return !(a == b); }
};

template <class S>
std::string morphism_str(const RepMorphism<S>& f) {
    std::string s;
    for (std::size_t x = 0; x < f.comp.size(); ++x) {
        if (x) s += " ";
        s += f.src->gpd->obj_labels[x] + ":" + f.comp[x].str();
    }
    return s;
}

/// Errors: GroupoidMismatch, DimMismatch(x), NotNatural(a).
template <class S>
RepMorphism<S> rep_hom_validate(RepMorphism<S> f) {
    if (f.src->gpd != f.dst->gpd) fail("GroupoidMismatch", f.src->name + " vs " + f.dst->name);
    const auto& G = *f.src->gpd;
    if (f.comp.size() != G.num_objects()) fail("DimMismatch", "component count");
    for (std::size_t x = 0; x < G.num_objects(); ++x)
        if (f.comp[x].rows() != f.dst->dim[x] || f.comp[x].cols() != f.src->dim[x]) fail("DimMismatch", G.obj_labels[x]);
    for (std::size_t a = 0; a < G.num_arrows(); ++a)
        if (f.comp[G.tgt[a]] * f.src->mat[a] != f.dst->mat[a] * f.comp[G.src[a]]) fail("NotNatural", G.arr_labels[a]);
    return f;
}

template <class S>
RepMorphism<S> identity_morphism(const RepPtr<S>& r) {
    RepMorphism<S> f{r, r, {}};
    for (auto d : r->dim) f.comp.push_back(Matrix<S>::identity(d));
    return f;
}

template <class S>
RepMorphism<S> zero_morphism(const RepPtr<S>& src, const RepPtr<S>& dst) {
    RepMorphism<S> f{src, dst, {}};
    for (std::size_t x = 0; x < src->dim.size(); ++x) f.comp.emplace_back(dst->dim[x], src->dim[x]);
    return f;
}

/// g o f
template <class S>
RepMorphism<S> compose(const RepMorphism<S>& g, const RepMorphism<S>& f) {
    RepMorphism<S> h{f.src, g.dst, {}};
    for (std::size_t x = 0; x < f.comp.size(); ++x) h.comp.push_back(g.comp[x] * f.comp[x]);
    return h;
}

template <class S>
RepMorphism<S> operator+(const RepMorphism<S>& f, const RepMorphism<S>& g) {
    RepMorphism<S> h{f.src, f.dst, {}};
    for (std::size_t x = 0; x < f.comp.size(); ++x) h.comp.push_back(f.comp[x] + g.comp[x]);
    return h;
}

template <class S>
RepMorphism<S> operator*(const S& c, const RepMorphism<S>& f) {
    RepMorphism<S> h{f.src, f.dst, {}};
    for (const auto& m : f.comp) h.comp.push_back(c * m);
    return h;
}

/// Componentwise inverse. Errors: NotInvertible.
template <class S>
RepMorphism<S> inverse(const RepMorphism<S>& f) {
    RepMorphism<S> h{f.dst, f.src, {}};
    for (const auto& m : f.comp) h.comp.push_back(inverse(m));
    return h;
}

/// Blockwise direct sum. Errors: GroupoidMismatch.
template <class S>
RepPtr<S> direct_sum(const RepPtr<S>& a, const RepPtr<S>& b) {
    if (a->gpd != b->gpd) fail("GroupoidMismatch", a->name + " vs " + b->name);
    std::vector<std::size_t> dim;
    for (std::size_t x = 0; x < a->dim.size(); ++x) dim.push_back(a->dim[x] + b->dim[x]);
    std::vector<Matrix<S>> mat;
    for (std::size_t p = 0; p < a->mat.size(); ++p) mat.push_back(block_diag(a->mat[p], b->mat[p]));
    return rep_validate<S>(a->gpd, std::move(dim), std::move(mat), a->name + "+" + b->name);
}

/**
 * \brief Hom space as a subspace of the component vector space.
 *
 * Coordinates: the entries of f_x concatenated over objects in row-major
 * order. `allowed`, when nonempty, restricts every component to the span of
 * the given square matrices (all objects must then have that dimension).
 */
template <class S>
struct HomSpace {
    RepPtr<S> src, dst;
    std::vector<RepMorphism<S>> basis;
    Matrix<S> columns;  // basis vectors as columns, in coordinates

    std::size_t dim() const { return basis.size(); }

    // rows of `columns` forming an invertible square block, and its inverse
    std::vector<std::size_t> read_rows;
    Matrix<S> read_inv;

    /// Fixes read_rows/read_inv from `columns`.
    void prepare() {
        Matrix<S> t(columns.cols(), columns.rows());
        for (std::size_t i = 0; i < columns.rows(); ++i)
            for (std::size_t k = 0; k < columns.cols(); ++k) t(k, i) = columns(i, k);
        read_rows = rref(t).pivots;
        Matrix<S> sq(read_rows.size(), read_rows.size());
        for (std::size_t r = 0; r < read_rows.size(); ++r)
            for (std::size_t k = 0; k < columns.cols(); ++k) sq(r, k) = columns(read_rows[r], k);
        read_inv = inverse(sq);
    }

    /// Coordinates of f in the basis. Errors: NotInHomSpace.
    std::vector<S> coordinates(const RepMorphism<S>& f) const {
        std::vector<S> v;
        for (const auto& m : f.comp)
            for (const auto& e : m.data()) v.push_back(e);
        if (v.size() != columns.rows()) fail("NotInHomSpace", morphism_str(f));
        const std::size_t k = columns.cols();
        std::vector<S> c(k, S(0));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                if (v[read_rows[b]] != 0) c[a] += read_inv(a, b) * v[read_rows[b]];
        // c is forced by the square block; membership needs every row to agree
        for (std::size_t i = 0; i < v.size(); ++i) {
            S s(0);
            for (std::size_t a = 0; a < k; ++a)
                if (c[a] != 0 && columns(i, a) != 0) s += columns(i, a) * c[a];
            if (s != v[i]) fail("NotInHomSpace", morphism_str(f));
        }
        return c;
    }

    RepMorphism<S> combine(const std::vector<S>& c) const {
        RepMorphism<S> h = zero_morphism(src, dst);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (c[k] != 0) h = h + c[k] * basis[k];
        return h;
    }
};

/**
 * \brief Solves the naturality system exactly; basis vectors come in the
 * order of the free columns of the reduced system. Errors: GroupoidMismatch.
 */
template <class S>
HomSpace<S> hom_space(const RepPtr<S>& src, const RepPtr<S>& dst, const std::vector<Matrix<S>>& allowed = {}) {
    if (src->gpd != dst->gpd) fail("GroupoidMismatch", src->name + " vs " + dst->name);
    const auto& G = *src->gpd;
    const std::size_t n = G.num_objects();
    std::vector<std::size_t> off(n + 1, 0);
    for (std::size_t x = 0; x < n; ++x) off[x + 1] = off[x] + dst->dim[x] * src->dim[x];
    const std::size_t D = off[n];
    // parameters: either raw entries, or coefficients over `allowed` per object
    const std::size_t per = allowed.size();
    const std::size_t P = per ? per * n : D;
    if (per)
        for (std::size_t x = 0; x < n; ++x)
            if (src->dim[x] != allowed[0].cols() || dst->dim[x] != allowed[0].rows())
                fail("DimMismatch", "restricted hom space at " + G.obj_labels[x]);
    // embed: parameter vector -> coordinate vector
    Matrix<S> E(D, P);
    if (!per) {
        E = Matrix<S>::identity(D);
    } else {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t k = 0; k < per; ++k)
                for (std::size_t e = 0; e < allowed[k].data().size(); ++e) E(off[x] + e, x * per + k) = allowed[k].data()[e];
    }
    // equations f_y rho(a) - rho'(a) f_x = 0 in coordinates
    std::vector<std::vector<S>> rows;
    for (std::size_t a = 0; a < G.num_arrows(); ++a) {
        std::size_t x = G.src[a], y = G.tgt[a];
        const auto& A = src->mat[a];   // dim y x dim x (src)
        const auto& B = dst->mat[a];   // dst dims
        std::size_t r = dst->dim[y], c = src->dim[x];
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                std::vector<S> row(D, S(0));
                // (f_y A)_{ij} = sum_k f_y(i,k) A(k,j)
                for (std::size_t k = 0; k < src->dim[y]; ++k) row[off[y] + i * src->dim[y] + k] += A(k, j);
                // (B f_x)_{ij} = sum_k B(i,k) f_x(k,j)
                for (std::size_t k = 0; k < dst->dim[x]; ++k) row[off[x] + k * c + j] -= B(i, k);
                rows.push_back(std::move(row));
            }
    }
    Matrix<S> M(rows.size(), D);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < D; ++j) M(i, j) = rows[i][j];
    Matrix<S> ME = M * E;
    auto ns = nullspace(ME);
    // drop parameter directions that embed to zero (dependent `allowed`)
    std::vector<std::vector<S>> vecs;
    for (const auto& p : ns.basis) {
        std::vector<S> v(D, S(0));
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < P; ++j)
                if (p[j] != 0) v[i] += E(i, j) * p[j];
        vecs.push_back(std::move(v));
    }
    // independent subset, in order
    HomSpace<S> hs{src, dst, {}, Matrix<S>(D, 0), {}, {}};
    std::vector<std::vector<S>> kept;
    for (auto& v : vecs) {
        Matrix<S> T(D, kept.size() + 1);
        for (std::size_t k = 0; k < kept.size(); ++k)
            for (std::size_t i = 0; i < D; ++i) T(i, k) = kept[k][i];
        for (std::size_t i = 0; i < D; ++i) T(i, kept.size()) = v[i];
        if (rank(T) == kept.size() + 1) kept.push_back(std::move(v));
    }
    hs.columns = Matrix<S>(D, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
        RepMorphism<S> f{src, dst, {}};
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<S> e(kept[k].begin() + off[x], kept[k].begin() + off[x + 1]);
            f.comp.emplace_back(dst->dim[x], src->dim[x], std::move(e));
        }
        for (std::size_t i = 0; i < D; ++i) hs.columns(i, k) = kept[k][i];
        hs.basis.push_back(std::move(f));
    }
    hs.prepare();
    return hs;
}

template <class S>
std::vector<RepMorphism<S>> hom_space_basis(const RepPtr<S>& src, const RepPtr<S>& dst) {
    return hom_space(src, dst).basis;
}

/// Kernel and cokernel of a morphism, with the canonical mono and epi.
template <class S>
struct KernelCokernel {
    RepPtr<S> kernel, cokernel;
    RepMorphism<S> mono, epi;
};

/**
 * \brief Kernel and cokernel. The rank of f_x must be the same at every
 * object. Errors: NonConstantRank(x,y).
 */
template <class S>
KernelCokernel<S> kernel_cokernel(const RepMorphism<S>& f) {
    rep_hom_validate(f);
    const auto& G = *f.src->gpd;
    const std::size_t n = G.num_objects();
    std::vector<std::size_t> rk;
    for (std::size_t x = 0; x < n; ++x) rk.push_back(rank(f.comp[x]));
    for (std::size_t x = 1; x < n; ++x)
        if (rk[x] != rk[0]) fail("NonConstantRank", G.obj_labels[0] + "," + G.obj_labels[x]);
    // kernel: K_x = basis of null(f_x) as columns; rho_K(a) solves K_y M = rho(a) K_x
    std::vector<Matrix<S>> K, Q, Qsec;
    for (std::size_t x = 0; x < n; ++x) {
        auto ns = nullspace(f.comp[x]);
        Matrix<S> k(f.src->dim[x], ns.basis.size());
        for (std::size_t j = 0; j < ns.basis.size(); ++j)
            for (std::size_t i = 0; i < f.src->dim[x]; ++i) k(i, j) = ns.basis[j][i];
        K.push_back(std::move(k));
        // cokernel: q_x rows span the left nullspace of f_x, so q_x f_x = 0
        auto ln = nullspace(f.comp[x].transpose());
        Matrix<S> q(ln.basis.size(), f.dst->dim[x]);
        for (std::size_t i = 0; i < ln.basis.size(); ++i)
            for (std::size_t j = 0; j < f.dst->dim[x]; ++j) q(i, j) = ln.basis[i][j];
        // right inverse of q (full row rank): s with q s = 1
        Matrix<S> sec(q.cols(), q.rows());
        for (std::size_t i = 0; i < q.rows(); ++i) {
            std::vector<S> e(q.rows(), S(0));
            e[i] = S(1);
            auto col = solve(q, e);
            for (std::size_t j = 0; j < q.cols(); ++j) sec(j, i) = (*col)[j];
        }
        Qsec.push_back(std::move(sec));
        Q.push_back(std::move(q));
    }
    auto lift = [](const Matrix<S>& k, const Matrix<S>& target) {
        // unique M with k M = target (k injective)
        Matrix<S> M(k.cols(), target.cols());
        for (std::size_t j = 0; j < target.cols(); ++j) {
            std::vector<S> b;
            for (std::size_t i = 0; i < target.rows(); ++i) b.push_back(target(i, j));
            auto s = solve(k, b);
            if (!s) fail("ValidationError", "kernel not invariant");
            for (std::size_t i = 0; i < k.cols(); ++i) M(i, j) = (*s)[i];
        }
        return M;
    };
    std::vector<std::size_t> kd, cd;
    for (std::size_t x = 0; x < n; ++x) kd.push_back(K[x].cols()), cd.push_back(Q[x].rows());
    std::vector<Matrix<S>> km, cm;
    for (std::size_t a = 0; a < G.num_arrows(); ++a) {
        std::size_t x = G.src[a], y = G.tgt[a];
        km.push_back(lift(K[y], f.src->mat[a] * K[x]));
        cm.push_back(Q[y] * f.dst->mat[a] * Qsec[x]);
    }
    auto ker = rep_validate<S>(f.src->gpd, kd, std::move(km), "ker");
    auto cok = rep_validate<S>(f.src->gpd, cd, std::move(cm), "coker");
    RepMorphism<S> mono{ker, f.src, K}, epi{f.dst, cok, Q};
    return {ker, cok, rep_hom_validate(mono), rep_hom_validate(epi)};
}

}  // namespace cohere
