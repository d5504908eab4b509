#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "zagreb/graph.hpp"

namespace zagreb {

Graph path_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

/// Star S_n (centre 0, leaves 1..n-1) with leaf 1 joined to the m-n+1 leaves
/// 2..m-n+2, giving m edges. Requires n >= 4 and n-1 <= m <= 2n-3.
Graph s_n_m(std::size_t n, std::size_t m);

/// K4 on 0..3 with n-4 pendants on vertex 0. Requires n >= 4.
Graph s_n_k4(std::size_t n);

/// Graphs and bounds with a registered closed form for EM1.
enum class Reference {
  Path,           // P_n
  Star,           // S_n
  Cycle,          // C_n
  UnicyclicMax,   // S_n^n
  BicyclicMax,    // S_n^{n+1}
  TricyclicMax,   // S_n^{n+2}
  SnK4,           // S_n^{K4}
  Gamma1,
  Gamma2,
  Gamma3,
  Gamma4,
  BicyclicMin,    // lower bound 4n+34
  TricyclicMin,   // lower bound 4n+68
};

inline constexpr Reference kAllReferences[] = {
    Reference::Path,         Reference::Star,        Reference::Cycle,   Reference::UnicyclicMax,
    Reference::BicyclicMax,  Reference::TricyclicMax, Reference::SnK4,   Reference::Gamma1,
    Reference::Gamma2,       Reference::Gamma3,      Reference::Gamma4,  Reference::BicyclicMin,
    Reference::TricyclicMin,
};

struct ReferenceInfo {
  std::string_view name;
  std::string_view formula;   // human-readable polynomial in n
  bool stated;                // closed form given vs. derived and checked here
  std::size_t min_order;
  bool has_constructor;
};

ReferenceInfo reference_info(Reference ref);
std::optional<Reference> parse_reference(std::string_view name);

/// Exact EM1 value of the closed form at order n. Throws GraphError if n is
/// below the reference's minimum order.
std::int64_t expected_em1(Reference ref, std::size_t n);

/// The constructed graph for references that have one.
Graph construct(Reference ref, std::size_t n);

}  // namespace zagreb
