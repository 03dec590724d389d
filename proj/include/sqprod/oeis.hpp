#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sqprod::oeis {

struct BFileEntry {
  std::int64_t index = 0;
  mpz_class value;
  friend bool operator==(const BFileEntry& a, const BFileEntry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

// '#' comment lines and blank lines are skipped; each data line holds
// "index value" separated by whitespace. Indices must strictly increase.
// Throws ParseError carrying the 1-based line number.
std::vector<BFileEntry> parse_bfile(std::string_view text);

// One "index value\n" line per entry.
std::string serialize_bfile(std::span<const BFileEntry> entries);

// Entry with the given index, if present.
std::optional<mpz_class> lookup(std::span<const BFileEntry> entries, std::int64_t index);

// "A" followed by exactly six digits.
bool is_valid_id(std::string_view id);

// $SQPROD_CACHE_DIR, else $XDG_CACHE_HOME/sqprod, else ~/.cache/sqprod.
std::filesystem::path default_cache_dir();

// Verbatim text of a bundled fixture, if one ships for this id.
std::optional<std::string_view> bundled_fixture(std::string_view id);
std::vector<std::string> bundled_fixture_ids();

struct FetchOptions {
  std::filesystem::path cache_dir = default_cache_dir();
  bool offline = true;
  std::string base_url = "https://oeis.org";
};

enum class FetchSource { kCache, kNetwork, kFixture };

struct FetchResult {
  std::vector<BFileEntry> entries;
  FetchSource source = FetchSource::kCache;
};

// Cache first; then one HTTP GET of {base_url}/{id}/b{digits}.txt (online
// only), stored verbatim via write-temp-then-rename together with a
// "<id>.fetched" timestamp sidecar; then the bundled fixture.
FetchResult fetch_sequence_with_source(std::string_view id, const FetchOptions& options);
std::vector<BFileEntry> fetch_sequence(std::string_view id, const FetchOptions& options);

// Writes bytes to path atomically (temporary sibling file, then rename).
void atomic_write(const std::filesystem::path& path, std::string_view bytes);

struct PrefixComparison {
  struct Item {
    std::int64_t index;
    mpz_class computed;
    mpz_class reference;
    bool match;
  };
  std::vector<Item> items;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
};

// Compares indices <= upto present in both inputs.
PrefixComparison compare_prefix(const std::map<std::int64_t, mpz_class>& computed,
                                std::span<const BFileEntry> reference, std::int64_t upto);

nlohmann::json to_json(const PrefixComparison& c);

}  // namespace sqprod::oeis
