#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "httplib.h"
#include "sqprod/errors.hpp"
#include "sqprod/oeis.hpp"

using namespace sqprod;
using namespace sqprod::oeis;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("sqprod-oeis-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

class LocalServer {
 public:
  LocalServer() {
    server_.Get(R"(/(A\d{6})/b(\d{6})\.txt)", [this](const httplib::Request& req,
                                                      httplib::Response& res) {
      ++hits_;
      if (req.matches[1] == "A000004") {
        res.set_content("# zeros\n0 0\n1 0\n2 0\n", "text/plain");
      } else {
        res.status = 404;
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int hits() const { return hits_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
};

}  // namespace

TEST_CASE("b-file parsing") {
  const auto e = parse_bfile("1 0\n2 1\n3 2");
  REQUIRE(e.size() == 3);
  CHECK(e[0] == BFileEntry{1, 0});
  CHECK(e[2] == BFileEntry{3, 2});
  CHECK(parse_bfile("# comment\n1 1") == std::vector<BFileEntry>{{1, 1}});
  CHECK(parse_bfile("\n  \n5\t-3  \r\n6 +4\n") == std::vector<BFileEntry>{{5, -3}, {6, 4}});
  CHECK(parse_bfile("7 123456789012345678901234567890\n")[0].value ==
        mpz_class("123456789012345678901234567890"));

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_bfile(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("1 x") == 1);
  CHECK(line_of("# c\n1 1\n2") == 3);
  CHECK(line_of("1 1\n2 2 2") == 2);
  CHECK(line_of("2 1\n2 1") == 2);
  CHECK(line_of("1 -") == 1);
}

TEST_CASE("serialization round trip") {
  const std::string data = "1 0\n2 1\n3 -2\n10 99\n";
  CHECK(serialize_bfile(parse_bfile("# header\n" + data)) == data);
  CHECK(serialize_bfile(parse_bfile("1 0   \n2 1\t\n3 -2\n10 99")) == data);
}

TEST_CASE("lookup and ids") {
  const auto e = parse_bfile("1 5\n4 7\n");
  CHECK(lookup(e, 4) == mpz_class(7));
  CHECK_FALSE(lookup(e, 2).has_value());
  CHECK(is_valid_id("A373114"));
  CHECK_FALSE(is_valid_id("B123456"));
  CHECK_FALSE(is_valid_id("A12345"));
  CHECK_FALSE(is_valid_id("A1234567"));
}

TEST_CASE("bundled fixtures") {
  for (const char* id : {"A013928", "A372306", "A373119", "A373178", "A373114", "A360659"}) {
    REQUIRE(bundled_fixture(id).has_value());
    CHECK_FALSE(parse_bfile(*bundled_fixture(id)).empty());
  }
  CHECK(bundled_fixture_ids().size() == 6);
  TempDir dir;
  const FetchOptions offline{dir.path, true, "http://127.0.0.1:1"};
  CHECK(lookup(fetch_sequence("A373114", offline), 8) == mpz_class(5));
  CHECK(lookup(fetch_sequence("A360659", offline), 13) == mpz_class(-3));
  CHECK(fetch_sequence_with_source("A373114", offline).source == FetchSource::kFixture);
  CHECK_THROWS_AS(fetch_sequence("B123456", offline), ArgumentError);
  CHECK_THROWS_AS(fetch_sequence("A000004", offline), FetchError);
}

TEST_CASE("network fetch populates the cache") {
  LocalServer server;
  TempDir dir;
  const FetchOptions online{dir.path, false, server.url()};

  const auto cold = fetch_sequence_with_source("A000004", online);
  CHECK(cold.source == FetchSource::kNetwork);
  CHECK(cold.entries.size() == 3);
  CHECK(fs::exists(dir.path / "A000004.txt"));
  CHECK(fs::exists(dir.path / "A000004.fetched"));
  std::ifstream cached(dir.path / "A000004.txt");
  std::string bytes((std::istreambuf_iterator<char>(cached)), std::istreambuf_iterator<char>());
  CHECK(bytes == "# zeros\n0 0\n1 0\n2 0\n");

  const auto warm = fetch_sequence_with_source("A000004", online);
  CHECK(warm.source == FetchSource::kCache);
  CHECK(warm.entries == cold.entries);
  CHECK(server.hits() == 1);

  const FetchOptions offline{dir.path, true, server.url()};
  CHECK(fetch_sequence("A000004", offline) == cold.entries);
}

TEST_CASE("network failures") {
  LocalServer server;
  TempDir dir;
  const FetchOptions online{dir.path, false, server.url()};
  CHECK_THROWS_AS(fetch_sequence("A999999", online), FetchError);
  CHECK(fetch_sequence_with_source("A373114", online).source == FetchSource::kFixture);
  CHECK_FALSE(fs::exists(dir.path / "A999999.txt"));

  const FetchOptions unreachable{dir.path, false, "http://127.0.0.1:1"};
  CHECK_THROWS_AS(fetch_sequence("A000004", unreachable), FetchError);
}

TEST_CASE("atomic write replaces content") {
  TempDir dir;
  const auto file = dir.path / "sub" / "x.txt";
  atomic_write(file, "one\n");
  atomic_write(file, "two\n");
  std::ifstream in(file);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(s == "two\n");
  CHECK(std::distance(fs::directory_iterator(dir.path / "sub"), fs::directory_iterator{}) == 1);
}

TEST_CASE("prefix comparison") {
  const auto ref = parse_bfile(*bundled_fixture("A373114"));
  std::map<std::int64_t, mpz_class> computed;
  for (const auto& e : ref) computed[e.index] = e.value;
  auto ok = compare_prefix(computed, ref, 20);
  CHECK(ok.items.size() == 20);
  CHECK(ok.matches == 20);
  CHECK(ok.mismatches == 0);

  CHECK(compare_prefix({}, ref, 20).items.empty());

  computed[5] += 1;
  auto bad = compare_prefix(computed, ref, 20);
  CHECK(bad.mismatches == 1);
  const auto j = to_json(bad);
  CHECK(j["mismatch_items"][0]["index"] == 5);
  CHECK(compare_prefix(computed, ref, 4).mismatches == 0);
}
