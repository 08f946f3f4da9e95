#include "hyalba/frames.hpp"

#include <cstddef>

namespace hyalba {

namespace {

bool related(const KripkeFrame& f, World u, World v) { return (f.successors(u) >> v) & 1U; }

template <typename Fn>
bool all_worlds(const KripkeFrame& f, Fn fn) {
  for (World u = 0; u < f.size(); ++u) {
    if (!fn(u)) return false;
  }
  return true;
}

template <typename Fn>
bool some_world(const KripkeFrame& f, Fn fn) {
  for (World u = 0; u < f.size(); ++u) {
    if (fn(u)) return true;
  }
  return false;
}

std::vector<FrameProperty> build() {
  std::vector<FrameProperty> ps;
  ps.push_back({"reflexive", [](const KripkeFrame& f) { return all_worlds(f, [&](World u) { return related(f, u, u); }); }});
  ps.push_back({"irreflexive", [](const KripkeFrame& f) { return all_worlds(f, [&](World u) { return !related(f, u, u); }); }});
  ps.push_back({"symmetric", [](const KripkeFrame& f) {
                  return all_worlds(f, [&](World u) {
                    return all_worlds(f, [&](World v) { return !related(f, u, v) || related(f, v, u); });
                  });
                }});
  ps.push_back({"transitive", [](const KripkeFrame& f) {
                  return all_worlds(f, [&](World u) {
                    return all_worlds(f, [&](World v) {
                      return !related(f, u, v) ||
                             all_worlds(f, [&](World w) { return !related(f, v, w) || related(f, u, w); });
                    });
                  });
                }});
  ps.push_back({"euclidean", [](const KripkeFrame& f) {
                  return all_worlds(f, [&](World u) {
                    return all_worlds(f, [&](World v) {
                      return !related(f, u, v) ||
                             all_worlds(f, [&](World w) { return !related(f, u, w) || related(f, v, w); });
                    });
                  });
                }});
  ps.push_back({"serial", [](const KripkeFrame& f) { return all_worlds(f, [&](World u) { return f.successors(u) != 0; }); }});
  ps.push_back({"functional", [](const KripkeFrame& f) {
                  return all_worlds(f, [&](World u) { return (f.successors(u) & (f.successors(u) - 1)) == 0; });
                }});
  ps.push_back({"dense", [](const KripkeFrame& f) {
                  return all_worlds(f, [&](World u) {
                    return all_worlds(f, [&](World v) {
                      return !related(f, u, v) ||
                             some_world(f, [&](World w) { return related(f, u, w) && related(f, w, v); });
                    });
                  });
                }});
  ps.push_back({"confluent", [](const KripkeFrame& f) {
                  return all_worlds(f, [&](World u) {
                    return all_worlds(f, [&](World v) {
                      return all_worlds(f, [&](World w) {
                        if (!related(f, u, v) || !related(f, u, w)) return true;
                        return some_world(f, [&](World z) { return related(f, v, z) && related(f, w, z); });
                      });
                    });
                  });
                }});
  return ps;
}

}  // namespace

const std::vector<FrameProperty>& frame_properties() {
  static const std::vector<FrameProperty> ps = build();
  return ps;
}

const FrameProperty* find_frame_property(std::string_view name) {
  for (const auto& p : frame_properties()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string describe_frame_class(const std::vector<KripkeFrame>& frames, const std::vector<bool>& valid) {
  auto matches = [&](auto pred) {
    for (std::size_t k = 0; k < frames.size(); ++k) {
      if (pred(frames[k]) != valid[k]) return false;
    }
    return true;
  };
  if (matches([](const KripkeFrame&) { return true; })) return "all";
  if (matches([](const KripkeFrame&) { return false; })) return "none";
  const auto& ps = frame_properties();
  for (const auto& p : ps) {
    if (matches(p.holds)) return p.name;
  }
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      if (matches([&](const KripkeFrame& f) { return ps[a].holds(f) && ps[b].holds(f); })) {
        return ps[a].name + "+" + ps[b].name;
      }
    }
  }
  return "other";
}

bool frame_in_class(const KripkeFrame& frame, std::string_view description) {
  if (description == "all") return true;
  if (description == "none" || description == "other") return false;
  std::size_t start = 0;
  while (start <= description.size()) {
    auto end = description.find('+', start);
    if (end == std::string_view::npos) end = description.size();
    const auto* p = find_frame_property(description.substr(start, end - start));
    if (p == nullptr || !p->holds(frame)) return false;
    start = end + 1;
  }
  return true;
}

}  // namespace hyalba
