#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "dofic/rng.hpp"
#include "dofic/schemes.hpp"

using namespace dofic;

namespace {

// checks disjointness, coverage and every per-subset cap
void check_partition(const Partition& part, const std::vector<PartitionElement>& elements,
                     const PartitionCaps& caps) {
  REQUIRE(static_cast<int>(part.subsets.size()) == caps.subsets);
  std::vector<PartitionElement> seen;
  for (const auto& subset : part.subsets) {
    int ds = 0, unknown = 0;
    for (const auto& e : subset) {
      seen.push_back(e);
      if (e.cls == ElementClass::DS) ++ds;
      if (e.cls == ElementClass::IsR2Unknown) ++unknown;
    }
    CHECK(static_cast<int>(subset.size()) <= caps.total_cap);
    if (caps.exact_fill) CHECK(static_cast<int>(subset.size()) == caps.total_cap);
    CHECK(ds <= caps.ds_cap);
    CHECK(ds + unknown <= caps.mixed_cap);
  }
  auto lex = [](const PartitionElement& a, const PartitionElement& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.slot != b.slot) return a.slot < b.slot;
    return a.row < b.row;
  };
  std::vector<PartitionElement> want = elements;
  std::sort(want.begin(), want.end(), lex);
  std::sort(seen.begin(), seen.end(), lex);
  CHECK(seen == want);  // disjoint + covering
}

}  // namespace

TEST_CASE("exact packing instance solved by hand") {
  // nine rows, three unknown, into three subsets of three with unknown cap two
  const auto inst = partition_instance({8, 1, 4, 3}, CornerLabel::Po23);
  REQUIRE(inst.has_value());
  CHECK(inst->elements.size() == 9);
  CHECK(std::count_if(inst->elements.begin(), inst->elements.end(),
                      [](const PartitionElement& e) { return e.cls == ElementClass::IsR2Unknown; }) == 3);
  CHECK(inst->caps.subsets == 3);
  CHECK(inst->caps.total_cap == 3);
  CHECK(inst->caps.mixed_cap == 2);
  CHECK(inst->caps.exact_fill);
  const Partition part = partition_symbols(inst->elements, inst->caps);
  check_partition(part, inst->elements, inst->caps);
}

TEST_CASE("empty input yields empty subsets") {
  const Partition part = partition_symbols({}, {1, 3, 1, 2, false});
  REQUIRE(part.subsets.size() == 1);
  CHECK(part.subsets[0].empty());
}

TEST_CASE("pigeonhole violations are rejected") {
  std::vector<PartitionElement> four_ds;
  for (int j = 0; j < 4; ++j) four_ds.push_back({ElementClass::DS, -1, j});
  CHECK_THROWS_AS(partition_symbols(four_ds, {1, 8, 3, 8, false}), PartitionInfeasible);
}

TEST_CASE("instances behind every partitioned corner satisfy the caps") {
  int seen = 0;
  for (int m1 = 1; m1 <= 8; ++m1)
    for (int m2 = 1; m2 <= 8; ++m2)
      for (int n1 = 1; n1 <= 8; ++n1)
        for (int n2 = 1; n2 <= n1; ++n2) {
          const AntennaConfig c{m1, m2, n1, n2};
          for (const auto corner : corners_for_case(classify_case(c))) {
            const auto inst = partition_instance(c, corner);
            if (!inst) continue;
            const Partition part = partition_symbols(inst->elements, inst->caps);
            check_partition(part, inst->elements, inst->caps);
            ++seen;
          }
        }
  CHECK(seen > 100);
}

TEST_CASE("a decremented cap that breaks the counting is always rejected") {
  Rng rng(23, 0);
  int rejected = 0;
  for (int t = 0; t < 3000 && rejected < 40; ++t) {
    const AntennaConfig c{2 + static_cast<int>(rng.below(6)), 1 + static_cast<int>(rng.below(7)),
                          1 + static_cast<int>(rng.below(7)), 1 + static_cast<int>(rng.below(7))};
    if (c.n1 < c.n2) continue;
    const auto corners = corners_for_case(classify_case(c));
    if (corners.empty()) continue;
    const auto inst = partition_instance(c, corners[rng.below(corners.size())]);
    if (!inst || inst->elements.empty()) continue;

    long n_ds = 0, n_un = 0;
    for (const auto& e : inst->elements) {
      if (e.cls == ElementClass::DS) ++n_ds;
      if (e.cls == ElementClass::IsR2Unknown) ++n_un;
    }
    const long n_all = static_cast<long>(inst->elements.size());
    PartitionCaps caps = inst->caps;
    const long k = caps.subsets;
    bool made_infeasible = false;
    if (n_all > (caps.total_cap - 1) * k) {
      --caps.total_cap;
      made_infeasible = true;
    } else if (n_ds + n_un > 0 &&
               n_ds + n_un > static_cast<long>(std::min(caps.mixed_cap - 1, caps.total_cap)) * k) {
      --caps.mixed_cap;
      made_infeasible = true;
    } else if (n_ds > 0 && n_ds > static_cast<long>(std::min({caps.ds_cap - 1, caps.mixed_cap,
                                                              caps.total_cap})) * k) {
      --caps.ds_cap;
      made_infeasible = true;
    }
    if (!made_infeasible) continue;
    CHECK_THROWS_AS(partition_symbols(inst->elements, caps), PartitionInfeasible);
    ++rejected;
  }
  CHECK(rejected >= 40);
}
