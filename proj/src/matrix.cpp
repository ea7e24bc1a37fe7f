#include "scenic/matrix.hpp"

namespace scenic {

Int bareiss_det(IntMatrix m) {
    const int n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

Int trace(const IntMatrix& m) {
    Int t = 0;
    for (int i = 0; i < m.rows; ++i) t += m(i, i);
    return t;
}

IntPoly char_poly(const IntMatrix& m) {
    const int n = m.rows;
    std::vector<Int> c(static_cast<size_t>(n) + 1, 0);
    c[static_cast<size_t>(n)] = 1;
    IntMatrix work = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix shifted = work;
            const Int& ck = c[static_cast<size_t>(n - k + 1)];
            for (int i = 0; i < n; ++i) shifted(i, i) += ck;
            work = m * shifted;
        }
        Int t = trace(work);
        Int ck;
        // c_{n-k} = -tr(M_k)/k, exact over Z
        mpz_divexact_ui(ck.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        c[static_cast<size_t>(n - k)] = -ck;
    }
    return IntPoly(std::move(c));
}

} // namespace scenic
