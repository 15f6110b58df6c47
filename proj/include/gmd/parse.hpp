#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gmd/ideal.hpp"
#include "gmd/polynomial.hpp"

namespace gmd {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line(line), col(col) {}
  int line, col;
};

template <class F>
struct IdealFileData {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;
  std::vector<std::vector<Polynomial<F>>> primes;  // optional blocks of linear forms
};

using IdealFileVariant = std::variant<IdealFileData<PrimeField>, IdealFileData<RationalField>>;
using RingVariant = std::variant<RingPtr<PrimeField>, RingPtr<RationalField>>;

// "ring QQ[t1,t2] order=lex vars=t2,t1" and friends
RingVariant parse_ring_decl(const std::string& text);

IdealFileVariant parse_ideal_file(const std::string& text);

// single polynomial over a known ring; used by tests and the round-trip check
Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>& ring, const std::string& text);
Polynomial<RationalField> parse_polynomial(const RingPtr<RationalField>& ring, const std::string& text);

struct PointsFileData {
  long long p = 0;
  int dim = 0;
  std::vector<std::vector<long long>> points;  // normalized: first nonzero coordinate is 1
};

PointsFileData parse_points_file(const std::string& text);

}  // namespace gmd
