#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cmtk {

// Dense univariate polynomial with exact integer coefficients, ascending
// powers. Trailing zeros are trimmed so degree() is honest.
class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly monomial(const mpz_class& coeff, int power) {
        std::vector<mpz_class> c(power + 1);
        c[power] = coeff;
        return ZPoly(std::move(c));
    }

    int degree() const { return int(c_.size()) - 1; } // -1 for the zero polynomial
    mpz_class coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : mpz_class(0); }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    ZPoly& operator+=(const ZPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    ZPoly operator+(const ZPoly& o) const {
        ZPoly r = *this;
        r += o;
        return r;
    }
    ZPoly operator*(const ZPoly& o) const {
        if (c_.empty() || o.c_.empty()) return {};
        std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return ZPoly(std::move(r));
    }
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    mpz_class eval(const mpz_class& x) const {
        mpz_class v = 0;
        for (int k = degree(); k >= 0; --k) v = v * x + c_[k];
        return v;
    }

    // Rendered in descending powers: "z^3 - 4z^2 + 3z", "0" for zero.
    std::string str(const std::string& var = "z") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const mpz_class& a = c_[k];
            if (a == 0) continue;
            mpz_class mag = abs(a);
            if (out.empty()) out += (a < 0 ? "-" : "");
            else out += (a < 0 ? " - " : " + ");
            bool unit = (mag == 1) && k > 0;
            if (!unit) out += mag.get_str();
            if (k >= 1) out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

} // namespace cmtk
