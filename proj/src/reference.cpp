#include "matchcx/reference.hpp"

namespace matchcx {

namespace {

GroupDescriptor z(std::size_t r) { return make_group(r); }
GroupDescriptor z3(std::size_t e, std::size_t r = 0) { return make_group(r, std::vector<Integer>(e, Integer(3))); }

}  // namespace

std::optional<std::map<int, GroupDescriptor>> published_matching_homology(int n) {
  switch (n) {
    case 3: return std::map<int, GroupDescriptor>{{0, z(2)}};
    case 4: return std::map<int, GroupDescriptor>{{0, z(2)}};
    case 5: return std::map<int, GroupDescriptor>{{1, z(6)}};
    case 6: return std::map<int, GroupDescriptor>{{1, z(16)}};
    case 7: return std::map<int, GroupDescriptor>{{1, z3(1)}, {2, z(20)}};
    case 8: return std::map<int, GroupDescriptor>{{2, z(132)}};
    case 9: return std::map<int, GroupDescriptor>{{2, z3(8, 42)}, {3, z(70)}};
    case 10: return std::map<int, GroupDescriptor>{{2, z3(1)}, {3, z(1216)}};
    case 11: return std::map<int, GroupDescriptor>{{3, z3(45, 1188)}, {4, z(252)}};
    case 12: return std::map<int, GroupDescriptor>{{3, z3(56)}, {4, z(12440)}};
    default: return std::nullopt;
  }
}

std::optional<std::map<int, GroupDescriptor>> published_deleted_edge_homology(int n) {
  switch (n) {
    case 2: return std::map<int, GroupDescriptor>{{-1, z(1)}};
    case 3: return std::map<int, GroupDescriptor>{{0, z(1)}};
    case 4: return std::map<int, GroupDescriptor>{{0, z(2)}};
    case 5: return std::map<int, GroupDescriptor>{{1, z(4)}};
    case 6: return std::map<int, GroupDescriptor>{{1, z(14)}};
    case 7: return std::map<int, GroupDescriptor>{{1, z3(1)}, {2, z(14)}};
    case 8: return std::map<int, GroupDescriptor>{{2, z(116)}};
    case 9: return std::map<int, GroupDescriptor>{{2, z3(7, 42)}, {3, z(50)}};
    case 10: return std::map<int, GroupDescriptor>{{2, z3(1)}, {3, z(1084)}};
    case 11: return std::map<int, GroupDescriptor>{{3, z3(37, 1146)}, {4, z(182)}};
    default: return std::nullopt;
  }
}

}  // namespace matchcx
