#pragma once

#include "rhotensor/charcalc.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace rhotensor {

inline constexpr const char* kCacheMagic = "rho-tensor-char";
inline constexpr const char* kCacheVersion = "v1";

/// Plain-text cache format:
///   rho-tensor-char v1 <algebra> <highest>
///   c1,...,cr:mult        (one line per dominant weight, sorted)
inline std::string serialize_character(const AlgebraId& algebra, const DominantCharacter& ch) {
  std::string out = std::string(kCacheMagic) + " " + kCacheVersion + " " + algebra.str() + " " + ch.highest.str() + "\n";
  for (const auto& [mu, m] : ch.mults) out += mu.str() + ":" + m.str() + "\n";
  return out;
}

struct ParsedCharacter {
  AlgebraId algebra;
  DominantCharacter character;
};

inline ParsedCharacter parse_character(const std::string& text) {
  std::istringstream in(text);
  std::string magic, version, algebra, highest;
  in >> magic >> version >> algebra >> highest;
  if (magic != kCacheMagic) throw std::invalid_argument("not a character cache file");
  if (version != kCacheVersion) throw std::invalid_argument("unsupported cache version '" + version + "'");
  ParsedCharacter out{parse_algebra(algebra), {parse_weight(highest), {}}};
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad cache line '" + line + "'");
    Integer m = parse_integer(line.substr(colon + 1));
    if (m <= 0) throw std::invalid_argument("non-positive multiplicity in cache line '" + line + "'");
    out.character.mults.emplace(parse_weight(line.substr(0, colon)), m);
  }
  auto top = out.character.mults.find(out.character.highest);
  if (top == out.character.mults.end() || top->second != 1) throw std::invalid_argument("cache file lacks its highest weight");
  return out;
}

/// Memoizes finite characters in memory and, optionally, as files in a
/// directory. Safe for concurrent use; writers are serialized per key.
class CharacterCache {
 public:
  struct FileInfo {
    std::string name;
    std::uintmax_t bytes = 0;
  };

  CharacterCache() = default;
  explicit CharacterCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// $RHO_TENSOR_CACHE, else $XDG_CACHE_HOME/rho-tensor, else ~/.cache/rho-tensor.
  static std::filesystem::path default_directory() {
    if (const char* env = std::getenv("RHO_TENSOR_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "rho-tensor";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "rho-tensor";
    return std::filesystem::temp_directory_path() / "rho-tensor";
  }

  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  std::shared_ptr<const DominantCharacter> character(const RootSystem& rs, const Weight& highest) {
    const AlgebraId id = rs.id().finite();
    const Key key{id, highest};
    std::shared_ptr<std::mutex> key_mutex;
    {
      std::lock_guard lock(mu_);
      if (auto it = memory_.find(key); it != memory_.end()) return it->second;
      auto& slot = key_mutexes_[key];
      if (!slot) slot = std::make_shared<std::mutex>();
      key_mutex = slot;
    }
    std::lock_guard key_lock(*key_mutex);
    {
      std::lock_guard lock(mu_);
      if (auto it = memory_.find(key); it != memory_.end()) return it->second;
    }
    std::shared_ptr<const DominantCharacter> ch = load(id, highest);
    if (!ch) {
      ch = std::make_shared<const DominantCharacter>(freudenthal(rs, highest));
      store(id, *ch);
    }
    std::lock_guard lock(mu_);
    memory_.emplace(key, ch);
    return ch;
  }

  std::vector<FileInfo> stat() const {
    std::vector<FileInfo> out;
    if (!dir_ || !std::filesystem::exists(*dir_)) return out;
    for (const auto& entry : std::filesystem::directory_iterator(*dir_)) {
      if (entry.is_regular_file() && entry.path().extension() == ".char") {
        out.push_back({entry.path().filename().string(), entry.file_size()});
      }
    }
    std::sort(out.begin(), out.end(), [](const FileInfo& a, const FileInfo& b) { return a.name < b.name; });
    return out;
  }

  /// Removes every cached file and forgets the in-memory copies.
  std::size_t clear() {
    std::lock_guard lock(mu_);
    memory_.clear();
    std::size_t removed = 0;
    if (!dir_ || !std::filesystem::exists(*dir_)) return 0;
    for (const auto& entry : std::filesystem::directory_iterator(*dir_)) {
      if (entry.is_regular_file() && entry.path().extension() == ".char") {
        std::filesystem::remove(entry.path());
        ++removed;
      }
    }
    return removed;
  }

  /// Fails with std::runtime_error if the directory cannot be created or written.
  void ensure_writable() const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    auto probe = *dir_ / (".probe-" + thread_tag());
    std::ofstream out(probe);
    if (ec || !out) throw std::runtime_error("cache directory " + dir_->string() + " is not writable");
    out.close();
    std::filesystem::remove(probe, ec);
  }

  static std::string file_name(const AlgebraId& id, const Weight& highest) {
    std::string s = id.str() + "-";
    for (std::size_t i = 0; i < highest.size(); ++i) s += (i ? "_" : "") + std::to_string(highest[i]);
    return s + ".char";
  }

 private:
  using Key = std::pair<AlgebraId, Weight>;

  static std::string thread_tag() {
    std::ostringstream os;
    os << std::this_thread::get_id();
    return os.str();
  }

  std::shared_ptr<const DominantCharacter> load(const AlgebraId& id, const Weight& highest) const {
    if (!dir_) return nullptr;
    std::ifstream in(*dir_ / file_name(id, highest));
    if (!in) return nullptr;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto parsed = parse_character(buf.str());
      if (parsed.algebra != id || parsed.character.highest != highest) return nullptr;
      return std::make_shared<const DominantCharacter>(std::move(parsed.character));
    } catch (const std::exception&) {
      return nullptr;  // unreadable entries are recomputed and overwritten
    }
  }

  void store(const AlgebraId& id, const DominantCharacter& ch) const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) return;
    auto final_path = *dir_ / file_name(id, ch.highest);
    auto tmp = final_path;
    tmp += ".tmp-" + thread_tag();
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << serialize_character(id, ch);
      if (!out) return;
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mu_;
  std::map<Key, std::shared_ptr<const DominantCharacter>> memory_;
  std::map<Key, std::shared_ptr<std::mutex>> key_mutexes_;
};

}  // namespace rhotensor
