#include "itervote/numeric.hpp"

namespace itervote {

std::vector<long double> log_factorials(int n) {
    std::vector<long double> lf(n + 1, 0.0L);
    for (int k = 2; k <= n; ++k) lf[k] = lf[k - 1] + std::log(static_cast<long double>(k));
    return lf;
}

std::vector<std::vector<mpz_class>> binomial_table(int n) {
    std::vector<std::vector<mpz_class>> c(n + 1);
    for (int m = 0; m <= n; ++m) {
        c[m].resize(m + 1);
        c[m][0] = c[m][m] = 1;
        for (int k = 1; k < m; ++k) c[m][k] = c[m - 1][k - 1] + c[m - 1][k];
    }
    return c;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace itervote
