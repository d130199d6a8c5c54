#pragma once

#include <random>
#include <string>
#include <vector>

#include "rtorsion/multipoly.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/rep.hpp"
#include "rtorsion/unipoly.hpp"

namespace rt_test {

using namespace rtorsion;

// Hand-rolled generators; every suite seeds its own engine so failures replay.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    Integer integer(int bound) { return Integer(uniform(-bound, bound)); }

    // Degree exactly `deg`, nonzero leading coefficient.
    UniPoly unipoly(int deg, int bound, const std::string& var = "x") {
        std::vector<Integer> c(deg + 1);
        for (auto& x : c) x = integer(bound);
        while (c.back() == 0) c.back() = integer(bound);
        return UniPoly(c, var);
    }

    UniPoly monic(int deg, int bound, const std::string& var = "x") {
        std::vector<Integer> c(deg + 1);
        for (auto& x : c) x = integer(bound);
        c.back() = 1;
        return UniPoly(c, var);
    }

    MultiPoly multipoly(const std::vector<std::string>& vars, int terms, int max_exp, int bound, int min_exp = 0) {
        MultiPoly p = MultiPoly(0).with_vars(vars);
        for (int i = 0; i < terms; ++i) {
            Exponents e(vars.size());
            for (auto& x : e) x = uniform(min_exp, max_exp);
            p += MultiPoly::monomial(vars, e, integer(bound));
        }
        return p;
    }

    Word word(int max_len, int gens = 2) {
        std::vector<Letter> ls;
        int len = uniform(0, max_len);
        for (int i = 0; i < len; ++i) ls.push_back(Letter{uniform(0, gens - 1), uniform(0, 1) ? 1 : -1});
        return Word(ls);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace rt_test
