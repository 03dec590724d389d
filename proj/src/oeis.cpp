#include "sqprod/oeis.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <unistd.h>

#include "httplib.h"
#include "sqprod/errors.hpp"

namespace sqprod::oeis {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kFixtures[];
extern const std::size_t kFixtureCount;
}  // namespace detail

namespace {

bool parse_integer_token(std::string_view token, mpz_class& out) {
  std::size_t start = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
  }
  std::string digits(token[0] == '+' ? token.substr(1) : token);
  return out.set_str(digits, 10) == 0;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);

    std::vector<std::string_view> tokens;
    for (std::size_t pos = 0; pos < line.size();) {
      const std::size_t end = std::min(line.find_first_of(" \t", pos), line.size());
      if (end > pos) tokens.push_back(line.substr(pos, end - pos));
      pos = end + 1;
    }
    mpz_class index;
    BFileEntry entry;
    if (tokens.size() != 2 || !parse_integer_token(tokens[0], index) ||
        !parse_integer_token(tokens[1], entry.value) || !index.fits_slong_p()) {
      throw ParseError(line_number, "expected \"index value\", got \"" + std::string(line) + "\"");
    }
    entry.index = index.get_si();
    if (!entries.empty() && entry.index <= entries.back().index) {
      throw ParseError(line_number, "index " + std::to_string(entry.index) +
                                        " does not increase");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string serialize_bfile(std::span<const BFileEntry> entries) {
  std::string out;
  for (const auto& e : entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.get_str();
    out += '\n';
  }
  return out;
}

std::optional<mpz_class> lookup(std::span<const BFileEntry> entries, std::int64_t index) {
  for (const auto& e : entries) {
    if (e.index == index) return e.value;
  }
  return std::nullopt;
}

bool is_valid_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (char c : id.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("SQPROD_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    return dir;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "sqprod";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "sqprod";
  }
  return std::filesystem::temp_directory_path() / "sqprod";
}

std::optional<std::string_view> bundled_fixture(std::string_view id) {
  for (std::size_t i = 0; i < detail::kFixtureCount; ++i) {
    if (detail::kFixtures[i].first == id) return detail::kFixtures[i].second;
  }
  return std::nullopt;
}

std::vector<std::string> bundled_fixture_ids() {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < detail::kFixtureCount; ++i) {
    ids.emplace_back(detail::kFixtures[i].first);
  }
  return ids;
}

void atomic_write(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::create_directories(path.parent_path());
  auto temp = path;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FetchError("cannot write cache file " + temp.string());
  }
  std::filesystem::rename(temp, path);
}

FetchResult fetch_sequence_with_source(std::string_view id, const FetchOptions& options) {
  if (!is_valid_id(id)) {
    throw ArgumentError("invalid OEIS id \"" + std::string(id) + "\" (expected A + 6 digits)");
  }
  const std::string name(id);
  const auto cached = options.cache_dir / (name + ".txt");
  if (std::filesystem::exists(cached)) {
    return {parse_bfile(read_file(cached)), FetchSource::kCache};
  }

  std::string network_error;
  if (!options.offline) {
    httplib::Client client(options.base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    const std::string path = "/" + name + "/b" + name.substr(1) + ".txt";
    if (auto response = client.Get(path)) {
      if (response->status == 200) {
        auto entries = parse_bfile(response->body);
        atomic_write(cached, response->body);
        atomic_write(options.cache_dir / (name + ".fetched"), utc_timestamp() + "\n");
        return {std::move(entries), FetchSource::kNetwork};
      }
      network_error = "HTTP " + std::to_string(response->status);
    } else {
      network_error = httplib::to_string(response.error());
    }
  }

  if (auto fixture = bundled_fixture(id)) {
    return {parse_bfile(*fixture), FetchSource::kFixture};
  }
  throw FetchError("no cached copy or bundled fixture for " + name +
                   (options.offline ? " (offline)" : " (" + network_error + ")"));
}

std::vector<BFileEntry> fetch_sequence(std::string_view id, const FetchOptions& options) {
  return fetch_sequence_with_source(id, options).entries;
}

PrefixComparison compare_prefix(const std::map<std::int64_t, mpz_class>& computed,
                                std::span<const BFileEntry> reference, std::int64_t upto) {
  PrefixComparison out;
  for (const auto& e : reference) {
    if (e.index > upto) break;
    auto it = computed.find(e.index);
    if (it == computed.end()) continue;
    const bool match = it->second == e.value;
    out.items.push_back({e.index, it->second, e.value, match});
    (match ? out.matches : out.mismatches) += 1;
  }
  return out;
}

nlohmann::json to_json(const PrefixComparison& c) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& item : c.items) {
    if (item.match) continue;
    mismatches.push_back({{"index", item.index},
                          {"computed", item.computed.get_str()},
                          {"reference", item.reference.get_str()}});
  }
  return {{"compared", c.items.size()},
          {"matches", c.matches},
          {"mismatches", c.mismatches},
          {"mismatch_items", std::move(mismatches)}};
}

}  // namespace sqprod::oeis
