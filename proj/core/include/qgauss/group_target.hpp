#pragma once

#include <stdexcept>
#include <string>

namespace qg {

/// Quantum group a functional lives on. For sp_plus the fundamental matrix
/// has size 2n and carries J = [[0, I_n], [-I_n, 0]].
struct GroupTarget {
  enum class Kind { u_plus, o_plus, sp_plus, u_classical, torus, free_group };

  Kind kind = Kind::u_plus;
  int n = 1;

  int ambient_dim() const { return kind == Kind::sp_plus ? 2 * n : n; }
  bool is_free_group() const { return kind == Kind::free_group; }
};

std::string target_name(GroupTarget::Kind kind);
GroupTarget::Kind target_kind_from_name(const std::string& name);

}  // namespace qg
