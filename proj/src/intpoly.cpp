#include "scenic/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace scenic {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
    normalize();
}

void IntPoly::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::from_csv(std::string_view text) {
    std::vector<Int> cs;
    std::string entry;
    auto flush = [&] {
        if (entry.empty()) raise(errc::parse_error, "empty coefficient entry");
        std::string t = entry;
        if (t[0] == '+') t.erase(0, 1);
        Int v;
        if (t.empty() || mpz_set_str(v.get_mpz_t(), t.c_str(), 10) != 0)
            raise(errc::parse_error, "bad coefficient '" + entry + "'");
        cs.push_back(std::move(v));
        entry.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == ',')
            flush();
        else
            entry.push_back(ch);
    }
    flush();
    return IntPoly(std::move(cs));
}

IntPoly IntPoly::monomial(int k, Int c) {
    std::vector<Int> cs(static_cast<size_t>(k) + 1, 0);
    cs.back() = std::move(c);
    return IntPoly(std::move(cs));
}

const Int& IntPoly::coeff(size_t i) const {
    static const Int zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

std::string IntPoly::to_csv() const {
    std::ostringstream out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ',';
        out << coeffs_[i].get_str();
    }
    return out.str();
}

std::string IntPoly::to_pretty() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(static_cast<size_t>(i));
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            out << 'x';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> cs(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = Int(static_cast<long>(i)) * coeffs_[i];
    return IntPoly(std::move(cs));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    Int g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<Int> cs(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        mpz_divexact(cs[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(cs));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(cs));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(cs));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> cs(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(cs));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
    std::vector<Int> cs(a.coeffs_.size());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = c * a.coeffs_[i];
    return IntPoly(std::move(cs));
}

IntPoly IntPoly::operator-() const { return Int(-1) * *this; }

Rat eval(const IntPoly& f, const Rat& x) {
    Rat v = 0;
    for (size_t i = f.size(); i-- > 0;) v = v * x + Rat(f.coeff(i));
    v.canonicalize();
    return v;
}

Int eval(const IntPoly& f, const Int& x) {
    Int v = 0;
    for (size_t i = f.size(); i-- > 0;) v = v * x + f.coeff(i);
    return v;
}

namespace {

/* Pseudo-remainder of a by b scaled by a positive power of lc(b), so the
 * sign of the result matches the sign of the true rational remainder. Plain
 * prem() multiplies by lc(b)^(delta+1), which flips signs when lc(b) is
 * negative and the exponent odd; Sturm chains need the sign preserved. */
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const int db = b.degree();
    const Int& lb = b.leading();
    int steps = 0;
    while (!r.is_zero() && r.degree() >= db) {
        int s = r.degree() - db;
        Int c = r.leading();
        // r <- lb*r - c*x^s*b  (kills the leading term)
        r = lb * r - c * (IntPoly::monomial(s) * b);
        ++steps;
    }
    if (lb < 0 && steps % 2 != 0) r = lb * r;
    return r;
}

int sign_of(const Int& v) { return sgn(v); }

} // namespace

IntPoly primitive_gcd(const IntPoly& f, const IntPoly& g) {
    IntPoly a = f.primitive_part();
    IntPoly b = g.primitive_part();
    if (a.is_zero()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = signed_prem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() < 0) a = Int(-1) * a;
    return a;
}

IntPoly exact_divide(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
    if (f.is_zero()) return IntPoly();
    if (f.degree() < g.degree()) throw std::invalid_argument("exact_divide: not divisible");
    IntPoly rem = f;
    std::vector<Int> q(static_cast<size_t>(f.degree() - g.degree()) + 1, 0);
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        Int c, check;
        mpz_tdiv_qr(c.get_mpz_t(), check.get_mpz_t(), rem.leading().get_mpz_t(),
                    g.leading().get_mpz_t());
        if (check != 0) throw std::invalid_argument("exact_divide: not divisible");
        int s = rem.degree() - g.degree();
        q[static_cast<size_t>(s)] = c;
        rem = rem - c * (IntPoly::monomial(s) * g);
    }
    if (!rem.is_zero()) throw std::invalid_argument("exact_divide: not divisible");
    return IntPoly(std::move(q));
}

bool squarefree_part_check(const IntPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() < 1) return true;
    return primitive_gcd(f, f.derivative()).degree() == 0;
}

int sturm_real_root_count(const IntPoly& f) {
    if (!squarefree_part_check(f))
        raise(errc::not_squarefree, "Sturm count requires a nonzero squarefree polynomial");
    if (f.degree() < 1) return 0;

    std::vector<IntPoly> chain;
    chain.push_back(f.primitive_part());
    chain.push_back(f.derivative().primitive_part());
    while (chain.back().degree() > 0) {
        IntPoly r = signed_prem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break; // cannot happen for squarefree f
        chain.push_back((Int(-1) * r).primitive_part());
    }

    // signs at +inf / -inf from leading coefficient and degree parity
    int var_neg = 0, var_pos = 0, prev_neg = 0, prev_pos = 0;
    for (const IntPoly& s : chain) {
        int lp = sign_of(s.leading());
        int ln = (s.degree() % 2 == 0) ? lp : -lp;
        if (prev_pos != 0 && lp != prev_pos) ++var_pos;
        if (prev_neg != 0 && ln != prev_neg) ++var_neg;
        prev_pos = lp;
        prev_neg = ln;
    }
    return var_neg - var_pos;
}

Rat cauchy_bound(const IntPoly& f) {
    if (!f.is_monic()) raise(errc::not_monic, "Cauchy bound requires a monic polynomial");
    Int m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Int a = abs(f.coeff(static_cast<size_t>(i)));
        if (a > m) m = a;
    }
    return Rat(m + 1);
}

namespace {

/* Fraction-free determinant (Bareiss) of a dense integer matrix; destroys m. */
Int bareiss_det_inplace(std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

} // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const int df = f.degree(), dg = g.degree();
    if (df == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(dg));
        return r;
    }
    if (dg == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(df));
        return r;
    }
    const size_t n = static_cast<size_t>(df + dg);
    std::vector<std::vector<Int>> syl(n, std::vector<Int>(n, 0));
    for (int row = 0; row < dg; ++row)
        for (int j = 0; j <= df; ++j) syl[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = f.coeff(static_cast<size_t>(df - j));
    for (int row = 0; row < df; ++row)
        for (int j = 0; j <= dg; ++j) syl[static_cast<size_t>(dg + row)][static_cast<size_t>(row + j)] = g.coeff(static_cast<size_t>(dg - j));
    return bareiss_det_inplace(syl);
}

Int discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant requires deg >= 1");
    const int d = f.degree();
    Int res = resultant(f, f.derivative());
    Int q;
    mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    return ((static_cast<long>(d) * (d - 1) / 2) % 2 == 0) ? q : Int(-q);
}

} // namespace scenic
