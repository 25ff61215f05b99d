#pragma once

#include <string>
#include <vector>

#include "qhopf/quasigroup.hpp"

namespace qhopf {

FiniteLoop cyclic_group(int n);
FiniteLoop symmetric_group_s3();

/// Order-5 loop with identity that fails the inverse property; negative
/// control for the IP-dependent constructions.
FiniteLoop non_ip_loop_order5();

struct CatalogEntry {
  std::string name;
  FiniteLoop loop;
};

/// C₂…C₈, S₃ and the Chein doubles M(C₃,2), M(S₃,2).
std::vector<CatalogEntry> builtin_catalog();

}  // namespace qhopf
