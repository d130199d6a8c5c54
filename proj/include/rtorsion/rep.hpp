#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rtorsion/multipoly.hpp"
#include "rtorsion/polymatrix.hpp"

namespace rtorsion {

struct Letter {
    int gen = 0;
    int exp = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group on indexed generators.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word reversed() const;
    Word power(int n) const;
    Word freely_reduced() const;
    Word prefix(std::size_t n) const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;

    std::string to_string(const std::vector<std::string>& gens) const;

private:
    std::vector<Letter> letters_;
};

/// Commutator a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

/// Parses words like "[y,x^-1]^2", "x y^-1 (x y)^3". Juxtaposition is the
/// product; whitespace is optional between generator names when they are
/// single letters.
Word parse_word(std::string_view text, const std::vector<std::string>& gens = {"x", "y"});

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

/// The twist knot J(2, 2m) with group <x, y | w x = y w>.
struct TwistKnotFamily {
    int m = 0;
    Word w;
    Word lambda;
    int d = 0;  // degree of the Riley polynomial in t

    static TwistKnotFamily make(int m);
    /// Relator w x w^-1 y^-1.
    Word relator() const;
    Presentation presentation() const;
    std::string name() const;
};

/// d(m) = 2m - 1 for m > 0, -2m for m < 0.
int twist_degree(int m);

/// Parses a knot token "J(2,2m)" (also the aliases 3_1, 4_1, 5_2) and returns m.
int parse_twist_knot(std::string_view token);

/// Images of the generators as 2x2 matrices over Z[s^±1, t].
struct Rep2x2 {
    std::vector<std::string> generators;
    std::vector<PolyMatrix> images;
};

/// x -> [[s, 1], [0, 1/s]], y -> [[s, 0], [-t, 1/s]].
Rep2x2 riley_rep();

/// Image of a word; inverse letters use the adjugate.
PolyMatrix word_eval(const Word& w, const Rep2x2& rep);

struct FoxTerm {
    Integer coeff;
    Word word;
};

/// Fox derivative d w / d gen as a formal integer combination of words.
std::vector<FoxTerm> fox_derivative(const Word& w, int gen);

/// Sum of coeff * rho(word) over the terms.
PolyMatrix fox_eval(const std::vector<FoxTerm>& terms, const Rep2x2& rep);

/// phi(s, t) = rho(w)_11 + (1/s - s) rho(w)_12. With the matrices of
/// riley_rep this is the sign that makes phi generate the relation ideal of
/// w x = y w.
MultiPoly riley_polynomial(const TwistKnotFamily& family);

/// Lambda(s, t) = rho(lambda)_11.
MultiPoly longitude_eigenvalue(const TwistKnotFamily& family);

struct TorsionFraction {
    MultiPoly numerator;
    MultiPoly denominator;
};

/// tau(E(K)) = det rho(dr/dy) / det(rho(x) - I) for r = w x w^-1 y^-1.
TorsionFraction complement_torsion(const TwistKnotFamily& family);

}  // namespace rtorsion
