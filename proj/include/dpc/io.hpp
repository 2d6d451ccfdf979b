#ifndef DPC_IO_HPP_
#define DPC_IO_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "builders.hpp"
#include "finite_monoid.hpp"
#include "partial_perm.hpp"
#include "presentation.hpp"

namespace dpc {

  inline constexpr char const* kLibraryVersion = "1.0.0";
  inline constexpr int         kCacheSchemaVersion = 1;

  // {"n": 4, "dom": [1, 3], "img": [2, 4]}
  inline nlohmann::ordered_json to_json(PartialPerm const& p) {
    nlohmann::ordered_json j;
    j["n"]   = p.degree();
    j["dom"] = p.domain_points();
    j["img"] = p.image_sequence();
    return j;
  }

  inline PartialPerm partial_perm_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("dom")
        || !j.contains("img")) {
      throw usage_error("partial perm JSON needs n, dom and img");
    }
    auto const dom = j.at("dom").get<std::vector<Point>>();
    auto const img = j.at("img").get<std::vector<Point>>();
    for (std::size_t i = 1; i < dom.size(); ++i) {
      if (dom[i - 1] >= dom[i]) {
        throw usage_error("partial perm JSON: dom must be strictly ascending");
      }
    }
    return PartialPerm(j.at("n").get<std::size_t>(), dom, img);
  }

  // {"alphabet": [...], "relations": [[[lhs], [rhs]], ...]} with letter
  // names in the word lists.
  inline nlohmann::ordered_json to_json(Presentation const& p) {
    nlohmann::ordered_json j;
    j["n"]        = p.n();
    j["alphabet"] = p.alphabet();
    auto names    = [&p](Word const& w) {
      std::vector<std::string> out;
      for (Letter a : w) {
        out.push_back(p.alphabet()[a]);
      }
      return out;
    };
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    nlohmann::ordered_json fams = nlohmann::ordered_json::array();
    for (auto const& r : p.relations()) {
      rels.push_back({names(r.lhs), names(r.rhs)});
      fams.push_back(r.family);
    }
    j["relations"] = rels;
    j["families"]  = fams;
    return j;
  }

  // One element per line, canonical order.
  inline void write_jsonl(std::ostream& os, FiniteMonoid const& m) {
    for (auto const& p : m.elements()) {
      os << to_json(p).dump() << '\n';
    }
  }

  inline std::vector<PartialPerm> read_jsonl(std::istream& is) {
    std::vector<PartialPerm> out;
    std::string              line;
    while (std::getline(is, line)) {
      if (line.empty()) {
        continue;
      }
      out.push_back(partial_perm_from_json(nlohmann::json::parse(line)));
    }
    return out;
  }

  // Directory from DPC_CACHE_DIR, else empty (caching disabled).
  inline std::filesystem::path default_cache_dir() {
    if (char const* env = std::getenv("DPC_CACHE_DIR"); env && *env) {
      return env;
    }
    return {};
  }

  // Disk cache of enumerations keyed by (n, method, library version, schema).
  class EnumerationCache {
   public:
    explicit EnumerationCache(std::filesystem::path dir) : _dir(std::move(dir)) {}

    std::filesystem::path path_for(std::size_t n, BuildMethod method) const {
      std::ostringstream name;
      name << "dpc-n" << n << '-' << to_string(method) << "-v" << kLibraryVersion
           << "-s" << kCacheSchemaVersion << ".jsonl";
      return _dir / name.str();
    }

    std::optional<FiniteMonoid> load(std::size_t n, BuildMethod method) const {
      auto const    p = path_for(n, method);
      std::ifstream in(p);
      if (!in) {
        return std::nullopt;
      }
      try {
        return FiniteMonoid(n, read_jsonl(in), standard_generators(n));
      } catch (std::exception const&) {
        return std::nullopt;
      }
    }

    void store(FiniteMonoid const& m, BuildMethod method) const {
      std::filesystem::create_directories(_dir);
      auto const target = path_for(m.degree(), method);
      auto       tmp    = target;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        write_jsonl(out, m);
      }
      std::filesystem::rename(tmp, target);
    }

    FiniteMonoid get_or_build(std::size_t n, BuildMethod method,
                              bool* hit = nullptr) const {
      if (auto m = load(n, method)) {
        if (hit) {
          *hit = true;
        }
        return *std::move(m);
      }
      if (hit) {
        *hit = false;
      }
      FiniteMonoid m = build(n, method);
      store(m, method);
      return m;
    }

   private:
    std::filesystem::path _dir;
  };

}  // namespace dpc

#endif  // DPC_IO_HPP_
