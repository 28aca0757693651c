#include "symlab/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>

namespace symlab {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string encode_terms(const SymPoly& p) {
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!s.empty()) s += ';';
    s += it->first.to_string() + ":" + to_string(it->second);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// Returns the key string and polynomial of a record, or nullopt.
std::optional<std::pair<std::string, SymPoly>> decode_record(const std::string& line) {
  const auto last_tab = line.rfind('\t');
  if (last_tab == std::string::npos) return std::nullopt;
  const std::string body = line.substr(0, last_tab);
  const std::string check = line.substr(last_tab + 1);
  if (check.size() != 17 || check[0] != '#' || check.substr(1) != hex(fnv1a(body))) return std::nullopt;
  auto fields = split(body, '\t');
  if (fields.size() < 4) return std::nullopt;
  try {
    const std::string terms = fields.back();
    fields.pop_back();
    const Partition lambda = Partition::parse(fields[2]);
    if (std::to_string(lambda.size()) != fields[1]) return std::nullopt;
    std::string poly_text;
    for (const auto& t : split(terms, ';')) poly_text += t + "\n";
    SymPoly p = SymPoly::parse(poly_text, lambda.size());
    if (p.nvars() != lambda.size() || p.coeff(lambda) != 1) return std::nullopt;
    std::string key;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) key += '\t';
      key += fields[i];
    }
    return std::make_pair(key, std::move(p));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::string CacheKey::to_string() const {
  std::string s = family + "\t" + std::to_string(lambda.size()) + "\t" + lambda.to_string();
  for (const auto& p : params) s += "\t" + p;
  return s;
}

std::optional<SymPoly> ExpansionCache::find(const CacheKey& key) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(key.to_string());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ExpansionCache::insert(const CacheKey& key, const SymPoly& value) {
  const std::string k = key.to_string();
  std::unique_lock lock(mutex_);
  const auto [it, inserted] = entries_.try_emplace(k, value);
  if (!inserted || !path_) return;
  const std::string body = k + "\t" + encode_terms(value);
  std::ofstream out(*path_, std::ios::app);
  out << body << "\t#" << hex(fnv1a(body)) << '\n';
}

void ExpansionCache::attach_file(const std::filesystem::path& path, std::ostream& warn) {
  std::unique_lock lock(mutex_);
  path_ = path;
  std::ifstream in(path);
  if (!in) {
    std::ofstream create(path);
    create << kHeader << '\n';
    return;
  }
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    warn << "warning: cache file " << path << " has an unknown header; ignoring its contents\n";
    ++skipped_;
    return;
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto rec = decode_record(line);
    if (!rec) {
      warn << "warning: skipping corrupt cache record at " << path.string() << ":" << lineno << '\n';
      ++skipped_;
      continue;
    }
    entries_.try_emplace(rec->first, std::move(rec->second));
  }
}

void ExpansionCache::detach_file() {
  std::unique_lock lock(mutex_);
  path_.reset();
}

void ExpansionCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  skipped_ = 0;
}

std::size_t ExpansionCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

ExpansionCache& default_cache() {
  static ExpansionCache cache;
  return cache;
}

}  // namespace symlab
