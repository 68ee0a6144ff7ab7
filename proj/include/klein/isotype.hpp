#pragma once

#include <map>
#include <string>
#include <vector>

#include "klein/rootsys.hpp"

namespace klein {

// Reductive Lie algebra up to isomorphism: center dimension plus simple ideals.
struct IsoType {
  int abelian_rank = 0;
  std::vector<SimpleType> simples;  // canonical, sorted by descending (rank, family)

  static IsoType make(int abelian_rank, std::vector<SimpleType> simples);
  int dim() const;
  int rank() const;
  // e.g. "D5+T1", "2A2+T2", "F4", "0"
  std::string str() const;
  friend bool operator==(const IsoType&, const IsoType&) = default;
  friend auto operator<=>(const IsoType&, const IsoType&) = default;
};

IsoType operator+(const IsoType& a, const IsoType& b);

// Parses compact-algebra spellings such as "su(6)+sp(1)", "so(10)+iR", "(su(3))^2+(iR)^2",
// "s(u(p)+u(q)+u(r)+u(s))", "e6", or canonical strings like "D4+3A1+T2". Integer parameters
// (p, q, r, s) are substituted from `params`. Low-rank identifications are applied.
IsoType parse_spelling(const std::string& text, const std::map<char, long>& params = {});

}  // namespace klein
