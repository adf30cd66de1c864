#include "kmk/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "kmk/errors.hpp"

namespace kmk {

namespace {

using Matrix = std::vector<std::vector<long long>>;
using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix to_rat(const Matrix& m) {
    RatMatrix r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
    return r;
}

// Determinant by fraction-free-ish rational elimination; matrices here are
// tiny (rank <= 9).
Rat determinant(RatMatrix m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rat f = m[row][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

RatMatrix invert(RatMatrix m) {
    size_t n = m.size();
    RatMatrix inv(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error("singular matrix in invert()");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (size_t k = 0; k < n; ++k) {
            m[col][k] /= p;
            inv[col][k] /= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rat f = m[row][col];
            for (size_t k = 0; k < n; ++k) {
                m[row][k] -= f * m[col][k];
                inv[row][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

Matrix principal_submatrix(const Matrix& m, const std::vector<int>& keep) {
    Matrix r(keep.size(), std::vector<long long>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            r[i][j] = m[static_cast<size_t>(keep[i])][static_cast<size_t>(keep[j])];
    return r;
}

bool positive_definite(const Matrix& m) {
    // Sylvester: all leading principal minors positive.
    for (size_t k = 1; k <= m.size(); ++k) {
        std::vector<int> keep(k);
        std::iota(keep.begin(), keep.end(), 0);
        if (!(determinant(to_rat(principal_submatrix(m, keep))) > Rat(0))) return false;
    }
    return true;
}

void check_gcm(const Matrix& A) {
    size_t n = A.size();
    if (n == 0) throw NotGCM("empty matrix");
    for (size_t i = 0; i < n; ++i)
        if (A[i].size() != n) throw NotGCM("matrix not square");
    for (size_t i = 0; i < n; ++i) {
        if (A[i][i] != 2) throw NotGCM("diagonal entry != 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (A[i][j] > 0) throw NotGCM("positive off-diagonal entry");
            if ((A[i][j] == 0) != (A[j][i] == 0)) throw NotGCM("asymmetric zero pattern");
        }
    }
    // Indecomposability: connected Dynkin graph.
    std::vector<char> seen(n, 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < n; ++j)
            if (!seen[j] && A[i][j] != 0) {
                seen[j] = 1;
                stack.push_back(j);
            }
    }
    for (char s : seen)
        if (!s) throw UnsupportedType("decomposable Dynkin diagram");
}

// Minimal positive integer symmetrizer d with d_i A_ij = d_j A_ji.
std::vector<long long> compute_symmetrizer(const Matrix& A) {
    size_t n = A.size();
    std::vector<Rat> d(n);
    std::vector<char> set_flag(n, 0);
    d[0] = Rat(1);
    set_flag[0] = 1;
    std::vector<size_t> stack{0};
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < n; ++j) {
            if (i == j || A[i][j] == 0) continue;
            Rat dj = d[i] * Rat(A[i][j]) / Rat(A[j][i]);
            if (set_flag[j]) {
                if (d[j] != dj) throw NotSymmetrizable("inconsistent ratio around a cycle");
            } else {
                d[j] = dj;
                set_flag[j] = 1;
                stack.push_back(j);
            }
        }
    }
    long long den_lcm = 1;
    for (const Rat& x : d) den_lcm = std::lcm(den_lcm, x.den());
    std::vector<long long> di(n);
    for (size_t i = 0; i < n; ++i) di[i] = (d[i] * Rat(den_lcm)).to_integer();
    long long g = 0;
    for (long long x : di) g = std::gcd(g, x);
    for (auto& x : di) x /= g;
    for (long long x : di)
        if (x <= 0) throw NotSymmetrizable("non-positive symmetrizer entry");
    // Full pairwise consistency check.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (di[i] * A[i][j] != di[j] * A[j][i]) throw NotSymmetrizable("DA not symmetric");
    return di;
}

// Primitive positive integer kernel vector of a rank-deficient matrix
// (rational nullspace of dimension 1 expected).
std::vector<long long> positive_kernel(const Matrix& A) {
    size_t n = A.size();
    RatMatrix m = to_rat(A);
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        Rat p = m[row][col];
        for (size_t k = 0; k < n; ++k) m[row][k] /= p;
        for (size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (size_t k = 0; k < n; ++k) m[r][k] -= f * m[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() != n - 1) throw UnsupportedType("kernel dimension != 1");
    // Free column is the one not among the pivots.
    std::vector<char> is_pivot(n, 0);
    for (size_t c : pivot_col) is_pivot[c] = 1;
    size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rat> v(n);
    v[free_col] = Rat(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free_col];
    long long den_lcm = 1;
    for (const Rat& x : v) den_lcm = std::lcm(den_lcm, x.den());
    std::vector<long long> k(n);
    for (size_t i = 0; i < n; ++i) k[i] = (v[i] * Rat(den_lcm)).to_integer();
    long long g = 0;
    for (long long x : k) g = std::gcd(g, x);
    for (auto& x : k) x /= g;
    if (k[free_col] < 0)
        for (auto& x : k) x = -x;
    for (long long x : k)
        if (x <= 0) throw UnsupportedType("kernel vector not strictly positive");
    return k;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.size(), std::vector<long long>(A.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j) T[j][i] = A[i][j];
    return T;
}

struct NameParts {
    char family;
    int rank;
    bool affine;
};

NameParts parse_name(const std::string& name) {
    if (name.size() < 2) throw UnsupportedType("algebra name too short: " + name);
    NameParts p{};
    p.family = static_cast<char>(std::toupper(name[0]));
    std::string rest = name.substr(1);
    p.affine = false;
    if (!rest.empty() && rest.back() == '~') {
        p.affine = true;
        rest.pop_back();
    }
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(c); }))
        throw UnsupportedType("cannot parse algebra name: " + name);
    p.rank = std::stoi(rest);
    return p;
}

Matrix finite_cartan_matrix(char family, int l) {
    auto chain = [](int n) {
        Matrix A(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        for (int i = 0; i + 1 < n; ++i) {
            A[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
            A[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
        }
        return A;
    };
    switch (family) {
        case 'A':
            if (l < 1) throw UnsupportedType("A_l needs l >= 1");
            return chain(l);
        case 'B': {
            if (l < 2) throw UnsupportedType("B_l needs l >= 2");
            Matrix A = chain(l);
            A[static_cast<size_t>(l - 2)][static_cast<size_t>(l - 1)] = -1;
            A[static_cast<size_t>(l - 1)][static_cast<size_t>(l - 2)] = -2;
            return A;
        }
        case 'C': {
            if (l < 2) throw UnsupportedType("C_l needs l >= 2");
            Matrix A = chain(l);
            A[static_cast<size_t>(l - 2)][static_cast<size_t>(l - 1)] = -2;
            A[static_cast<size_t>(l - 1)][static_cast<size_t>(l - 2)] = -1;
            return A;
        }
        case 'D': {
            if (l < 4) throw UnsupportedType("D_l needs l >= 4");
            Matrix A = chain(l - 1);
            for (auto& row : A) row.push_back(0);
            A.push_back(std::vector<long long>(static_cast<size_t>(l), 0));
            A[static_cast<size_t>(l - 1)][static_cast<size_t>(l - 1)] = 2;
            A[static_cast<size_t>(l - 3)][static_cast<size_t>(l - 1)] = -1;
            A[static_cast<size_t>(l - 1)][static_cast<size_t>(l - 3)] = -1;
            return A;
        }
        case 'E': {
            if (l < 6 || l > 8) throw UnsupportedType("E_l needs l in {6,7,8}");
            // Bourbaki numbering: chain 1-3-4-5-...-l, node 2 attached to 4.
            Matrix A(static_cast<size_t>(l), std::vector<long long>(static_cast<size_t>(l), 0));
            for (int i = 0; i < l; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
            auto link = [&](int i, int j) {
                A[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = -1;
                A[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = -1;
            };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < l; ++i) link(i, i + 1);
            return A;
        }
        case 'F': {
            if (l != 4) throw UnsupportedType("F family has rank 4 only");
            Matrix A = chain(4);
            A[1][2] = -1;
            A[2][1] = -2;
            return A;
        }
        case 'G': {
            if (l != 2) throw UnsupportedType("G family has rank 2 only");
            return Matrix{{2, -1}, {-3, 2}};
        }
        default:
            throw UnsupportedType(std::string("unknown family '") + family + "'");
    }
}

} // namespace

std::string RootVector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

std::string Weight::str() const {
    std::string s = "(";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ",";
        s += labels[i].str();
    }
    s += ")";
    if (!delta.is_zero()) s += "+" + delta.str() + "d";
    return s;
}

void CartanDatum::finish_construction() {
    n_ = static_cast<int>(A_.size());
    sym_ = compute_symmetrizer(A_);
    sym_max_ = *std::max_element(sym_.begin(), sym_.end());
    if (kind_ == AlgebraKind::Finite) {
        block_inv_ = invert(to_rat(A_));
    } else {
        marks_ = positive_kernel(A_);
        dual_marks_ = positive_kernel(transpose(A_));
        if (marks_[0] != 1)
            throw UnsupportedType("mark of the affine node is not 1 (twisted type?)");
        Matrix block(static_cast<size_t>(n_ - 1), std::vector<long long>(static_cast<size_t>(n_ - 1)));
        for (int i = 1; i < n_; ++i)
            for (int j = 1; j < n_; ++j)
                block[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = A_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        block_inv_ = invert(to_rat(block));
    }
}

CartanDatum CartanDatum::validate(const Matrix& matrix, const std::string& kind_hint) {
    check_gcm(matrix);
    compute_symmetrizer(matrix); // reject non-symmetrizable input before classifying
    size_t n = matrix.size();

    bool finite = positive_definite(matrix);
    bool affine = false;
    if (!finite) {
        affine = determinant(to_rat(matrix)).is_zero();
        if (affine) {
            // All proper principal minors must be positive; it is enough to
            // check positive definiteness of every one-node deletion.
            for (size_t drop = 0; drop < n && affine; ++drop) {
                std::vector<int> keep;
                for (size_t i = 0; i < n; ++i)
                    if (i != drop) keep.push_back(static_cast<int>(i));
                if (!positive_definite(principal_submatrix(matrix, keep))) affine = false;
            }
        }
        if (!affine) throw UnsupportedType("matrix is neither finite nor affine type");
    }

    if (!kind_hint.empty()) {
        if (kind_hint == "finite" && !finite) throw UnsupportedType("hint 'finite' contradicts matrix");
        if (kind_hint == "affine" && finite) throw UnsupportedType("hint 'affine' contradicts matrix");
        if (kind_hint != "finite" && kind_hint != "affine")
            throw UnsupportedType("unknown kind hint: " + kind_hint);
    }

    CartanDatum d;
    d.A_ = matrix;
    d.kind_ = finite ? AlgebraKind::Finite : AlgebraKind::UntwistedAffine;
    d.finish_construction();

    if (d.kind_ == AlgebraKind::UntwistedAffine) {
        // Untwisted means: deleting node 0 and re-extending by the highest
        // root of the finite part reproduces the input matrix.
        Matrix block(n - 1, std::vector<long long>(n - 1));
        for (size_t i = 1; i < n; ++i)
            for (size_t j = 1; j < n; ++j) block[i - 1][j - 1] = matrix[i][j];
        CartanDatum fin = CartanDatum::validate(block, "finite");
        fin.name_ = "finite-part";
        CartanDatum ext = fin.affinize();
        if (ext.A_ != matrix)
            throw UnsupportedType("affine matrix is not the untwisted extension of its finite part");
        auto fin_ptr = std::make_shared<CartanDatum>(std::move(fin));
        d.finite_part_ = fin_ptr;
    }
    d.name_ = "custom";
    return d;
}

CartanDatum CartanDatum::from_name(const std::string& name) {
    NameParts p = parse_name(name);
    CartanDatum fin = validate(finite_cartan_matrix(p.family, p.rank), "finite");
    fin.name_ = std::string(1, p.family) + std::to_string(p.rank);
    if (!p.affine) return fin;
    CartanDatum aff = fin.affinize();
    aff.name_ = fin.name_ + "~";
    return aff;
}

// Extends a finite datum by the lowest root -theta at new node 0.
CartanDatum CartanDatum::affinize() const {
    if (kind_ != AlgebraKind::Finite) throw UnsupportedType("can only affinize a finite datum");
    RootVector theta = highest_root();
    Weight theta_w = root_to_weight(theta);
    Rat theta_norm = bilinear(theta, theta);
    if (theta_norm != Rat(2)) throw Error("internal: highest root is not long");

    size_t n = static_cast<size_t>(n_) + 1;
    Matrix A(n, std::vector<long long>(n, 0));
    A[0][0] = 2;
    for (int j = 0; j < n_; ++j) {
        // a_{0j} = -<alpha_j, theta^vee> and a_{j0} = -<theta, alpha_j^vee>.
        RootVector ej(std::vector<long long>(static_cast<size_t>(n_), 0));
        ej.c[static_cast<size_t>(j)] = 1;
        Rat a0j = Rat(-2) * bilinear(theta, ej) / theta_norm;
        Rat aj0 = -theta_w.labels[static_cast<size_t>(j)];
        A[0][static_cast<size_t>(j) + 1] = a0j.to_integer();
        A[static_cast<size_t>(j) + 1][0] = aj0.to_integer();
    }
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            A[static_cast<size_t>(i) + 1][static_cast<size_t>(j) + 1] = A_[static_cast<size_t>(i)][static_cast<size_t>(j)];

    CartanDatum aff;
    aff.A_ = A;
    aff.kind_ = AlgebraKind::UntwistedAffine;
    aff.finish_construction();
    aff.finite_part_ = std::make_shared<CartanDatum>(*this);
    aff.name_ = name_ + "~";
    // Sanity: marks must be (1, theta coordinates).
    for (int j = 0; j < n_; ++j)
        if (aff.marks_[static_cast<size_t>(j) + 1] != theta.c[static_cast<size_t>(j)])
            throw Error("internal: affine marks disagree with highest root");
    return aff;
}

const CartanDatum& CartanDatum::finite() const {
    if (!affine()) throw UnsupportedType("finite() is only defined for affine data");
    return *finite_part_;
}

long long CartanDatum::delta_height() const {
    if (!affine()) throw UnsupportedType("delta_height() needs an affine datum");
    long long h = 0;
    for (long long m : marks_) h += m;
    return h;
}

Weight CartanDatum::fundamental_weight(int i) const {
    Weight w = zero_weight();
    w.labels[static_cast<size_t>(i)] = Rat(1);
    return w;
}

Weight CartanDatum::weyl_vector() const {
    Weight w = zero_weight();
    for (auto& l : w.labels) l = Rat(1);
    return w;
}

Weight CartanDatum::weight_from_labels(const std::vector<long long>& labels, Rat delta) const {
    if (static_cast<int>(labels.size()) != n_) throw Error("label vector has wrong length");
    Weight w;
    w.labels.assign(labels.begin(), labels.end());
    w.delta = affine() ? delta : Rat(0);
    return w;
}

Weight CartanDatum::root_to_weight(const RootVector& r) const {
    Weight w = zero_weight();
    for (int i = 0; i < n_; ++i) {
        Rat acc(0);
        for (int j = 0; j < n_; ++j)
            acc += Rat(A_[static_cast<size_t>(i)][static_cast<size_t>(j)] * r.c[static_cast<size_t>(j)]);
        w.labels[static_cast<size_t>(i)] = acc;
    }
    if (affine()) w.delta = Rat(r.c[0]);
    return w;
}

Rat CartanDatum::level(const Weight& w) const {
    if (!affine()) return Rat(0);
    Rat acc(0);
    for (int i = 0; i < n_; ++i) acc += Rat(dual_marks_[static_cast<size_t>(i)]) * w.labels[static_cast<size_t>(i)];
    return acc;
}

std::optional<std::vector<Rat>> CartanDatum::weight_root_coords(const Weight& w) const {
    std::vector<Rat> x(static_cast<size_t>(n_));
    if (!affine()) {
        for (int i = 0; i < n_; ++i) {
            Rat acc(0);
            for (int j = 0; j < n_; ++j) acc += block_inv_[static_cast<size_t>(i)][static_cast<size_t>(j)] * w.labels[static_cast<size_t>(j)];
            x[static_cast<size_t>(i)] = acc;
        }
        return x;
    }
    if (!level(w).is_zero()) return std::nullopt;
    x[0] = w.delta;
    // Solve the finite block for the remaining coordinates; row 0 then holds
    // automatically because the level is zero.
    std::vector<Rat> rhs(static_cast<size_t>(n_ - 1));
    for (int i = 1; i < n_; ++i)
        rhs[static_cast<size_t>(i - 1)] = w.labels[static_cast<size_t>(i)] - Rat(A_[static_cast<size_t>(i)][0]) * x[0];
    for (int i = 1; i < n_; ++i) {
        Rat acc(0);
        for (int j = 1; j < n_; ++j)
            acc += block_inv_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] * rhs[static_cast<size_t>(j - 1)];
        x[static_cast<size_t>(i)] = acc;
    }
    return x;
}

std::optional<RootVector> CartanDatum::weight_to_root(const Weight& w) const {
    auto coords = weight_root_coords(w);
    if (!coords) return std::nullopt;
    RootVector r(std::vector<long long>(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i) {
        if (!(*coords)[static_cast<size_t>(i)].is_integer()) return std::nullopt;
        r.c[static_cast<size_t>(i)] = (*coords)[static_cast<size_t>(i)].to_integer();
    }
    return r;
}

bool CartanDatum::is_integral(const Weight& w) const {
    for (const Rat& l : w.labels)
        if (!l.is_integer()) return false;
    return true;
}

bool CartanDatum::is_dominant(const Weight& w) const {
    if (!is_integral(w)) return false;
    for (const Rat& l : w.labels)
        if (l < Rat(0)) return false;
    return true;
}

bool CartanDatum::is_regular_dominant(const Weight& w) const {
    if (!is_integral(w)) return false;
    for (const Rat& l : w.labels)
        if (l < Rat(1)) return false;
    return true;
}

bool CartanDatum::dominance_leq(const Weight& mu, const Weight& lambda) const {
    auto r = weight_to_root(lambda - mu);
    return r && r->nonnegative();
}

Rat CartanDatum::bilinear(const Weight& x, const Weight& y) const {
    // Decompose x = sum_j c_j alpha_j + level(x) * Lambda_0 and pair against
    // the labels of y; (Lambda_0, y) equals the alpha_0-coordinate of y,
    // which in these coordinates is y.delta.
    Weight xr = x;
    Rat lev(0);
    if (affine()) {
        lev = level(x);
        xr.labels[0] -= lev;
    }
    auto coords = weight_root_coords(xr);
    if (!coords) throw Error("internal: level-adjusted weight not in root span");
    Rat acc(0);
    for (int j = 0; j < n_; ++j)
        acc += (*coords)[static_cast<size_t>(j)] * Rat(sym_[static_cast<size_t>(j)], sym_max_) * y.labels[static_cast<size_t>(j)];
    if (affine()) acc += lev * y.delta;
    return acc;
}

Rat CartanDatum::bilinear(const RootVector& x, const RootVector& y) const {
    // (alpha_i, alpha_j) = d_i A_ij / d_max.
    Rat acc(0);
    for (int i = 0; i < n_; ++i) {
        if (x.c[static_cast<size_t>(i)] == 0) continue;
        long long row = 0;
        for (int j = 0; j < n_; ++j)
            row += A_[static_cast<size_t>(i)][static_cast<size_t>(j)] * y.c[static_cast<size_t>(j)];
        acc += Rat(x.c[static_cast<size_t>(i)] * sym_[static_cast<size_t>(i)] * row, sym_max_);
    }
    return acc;
}

Rat CartanDatum::bilinear(const Weight& x, const RootVector& y) const {
    // (x, alpha_j) = d'_j <x, alpha_j^vee>.
    Rat acc(0);
    for (int j = 0; j < n_; ++j)
        acc += Rat(y.c[static_cast<size_t>(j)] * sym_[static_cast<size_t>(j)], sym_max_) * x.labels[static_cast<size_t>(j)];
    return acc;
}

Rat CartanDatum::coroot_pairing(const Weight& w, const RootVector& alpha) const {
    Rat norm = bilinear(alpha, alpha);
    if (norm.is_zero()) throw Error("coroot pairing with an imaginary root");
    return Rat(2) * bilinear(w, alpha) / norm;
}

std::vector<RootVector> CartanDatum::finite_positive_roots() const {
    // Reflection closure of the simple roots, staying positive.
    std::set<RootVector> roots;
    std::vector<RootVector> queue;
    for (int i = 0; i < n_; ++i) {
        RootVector e(std::vector<long long>(static_cast<size_t>(n_), 0));
        e.c[static_cast<size_t>(i)] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        RootVector b = queue.back();
        queue.pop_back();
        for (int i = 0; i < n_; ++i) {
            long long pairing = 0;
            for (int j = 0; j < n_; ++j)
                pairing += A_[static_cast<size_t>(i)][static_cast<size_t>(j)] * b.c[static_cast<size_t>(j)];
            RootVector r = b;
            r.c[static_cast<size_t>(i)] -= pairing;
            if (r.nonnegative() && !roots.count(r)) {
                roots.insert(r);
                queue.push_back(r);
            }
        }
    }
    return std::vector<RootVector>(roots.begin(), roots.end());
}

RootSlice CartanDatum::roots_up_to(long long H) const {
    if (H < 1) throw Error("roots_up_to needs H >= 1");
    RootSlice slice;
    slice.height_bound = H;
    if (!affine()) {
        for (const auto& r : finite_positive_roots())
            if (r.height() <= H) slice.real_roots.push_back(r);
    } else {
        const CartanDatum& fin = finite();
        long long dh = delta_height();
        std::vector<RootVector> fin_roots = fin.finite_positive_roots();
        auto embed = [&](const RootVector& b, long long sign) {
            RootVector r(std::vector<long long>(static_cast<size_t>(n_), 0));
            for (int j = 0; j < n_ - 1; ++j) r.c[static_cast<size_t>(j) + 1] = sign * b.c[static_cast<size_t>(j)];
            return r;
        };
        for (const auto& b : fin_roots) {
            for (long long k = 0;; ++k) {
                RootVector r = embed(b, +1) + k * delta_vector();
                if (r.height() > H) break;
                slice.real_roots.push_back(r);
            }
            for (long long k = 1;; ++k) {
                RootVector r = embed(b, -1) + k * delta_vector();
                if (r.height() > H) break;
                slice.real_roots.push_back(r);
            }
        }
        slice.imaginary_multiplicity = n_ - 1;
        for (long long k = 1; k * dh <= H; ++k) slice.imaginary_roots.push_back(k * delta_vector());
    }
    auto by_height = [](const RootVector& a, const RootVector& b) {
        long long ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.c < b.c;
    };
    std::sort(slice.real_roots.begin(), slice.real_roots.end(), by_height);
    std::sort(slice.imaginary_roots.begin(), slice.imaginary_roots.end(), by_height);
    return slice;
}

std::map<long long, long long> CartanDatum::coroot_height_counts() const {
    if (affine()) throw UnsupportedType("coroot heights are a finite-type invariant");
    std::map<long long, long long> p;
    Weight rho = weyl_vector();
    for (const auto& alpha : finite_positive_roots()) {
        Rat j = coroot_pairing(rho, alpha);
        if (!j.is_integer()) throw Error("internal: coroot height not integral");
        ++p[j.to_integer()];
    }
    return p;
}

std::vector<long long> CartanDatum::exponents() const {
    auto p = coroot_height_counts();
    std::vector<long long> e;
    long long maxj = p.empty() ? 0 : p.rbegin()->first;
    for (long long j = 1; j <= maxj; ++j) {
        long long pj = p.count(j) ? p.at(j) : 0;
        long long pj1 = p.count(j + 1) ? p.at(j + 1) : 0;
        for (long long c = 0; c < pj - pj1; ++c) e.push_back(j);
    }
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<long long> CartanDatum::degrees() const {
    auto d = exponents();
    for (auto& x : d) x += 1;
    return d;
}

RootVector CartanDatum::highest_root() const {
    if (affine()) throw UnsupportedType("highest_root is a finite-type invariant");
    auto roots = finite_positive_roots();
    auto it = std::max_element(roots.begin(), roots.end(),
                               [](const RootVector& a, const RootVector& b) { return a.height() < b.height(); });
    long long h = it->height();
    long long count = std::count_if(roots.begin(), roots.end(),
                                    [&](const RootVector& r) { return r.height() == h; });
    if (count != 1) throw Error("internal: highest root not unique");
    return *it;
}

std::string CartanDatum::weight_str(const Weight& w) const { return w.str(); }

} // namespace kmk
