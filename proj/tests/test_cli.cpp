#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "fb/cli.hpp"
#include "fb/error.hpp"
#include "support/fixtures.hpp"

using namespace fb;

namespace {

const char* kR1 =
    "# R1 with the residue field\n"
    "char: 5\n"
    "vars: x, y\n"
    "ideal: x^2, x*y\n"
    "module: quotient x, y\n";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("fb_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("problem files") {
  auto pb = parse_problem(kR1);
  CHECK(pb.ring->ideal_generators().size() == 2);
  CHECK(pb.ring->dimension() == 1);
  CHECK(pb.module_kind == "quotient");
  CHECK(pb.module.length() == Length::finite(1));
  CHECK(pb.digest.size() == 64);

  auto rx = parse_problem("char: 5\nvars: x, y\nideal: x^2, x*y\nmodule: quotient x\n");
  CHECK(rx.module.generators() == fbtest::matrix(rx.ring, {{"x"}}, {0}));

  // canonical text ignores comments, spacing and coefficient representatives
  auto same = parse_problem("char:5\n\n vars: x,y # names\nideal: x^2 , 6*x*y\nmodule: quotient x,y\n");
  CHECK(same.canonical == pb.canonical);
  CHECK(same.digest == pb.digest);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

  auto r5 = parse_problem(
      "char: 101\nvars: x, y, z, u, v\n"
      "ideal: x^2, x*z, z^2, x*u, z*v, u^2, v^2, z*u+x*v+u*v, y*u, y*v, y*x-z*u, y*z-x*v\n"
      "module: coker [u; v; z^2]\nrowdegs: 0, 0, -1\n");
  CHECK(r5.module.rank() == 3);
  CHECK(r5.module.row_degrees() == std::vector<Degree>{0, 0, -1});

  auto primes = parse_problem(std::string(kR1) + "minprimes: (x)\nlocalmult: 1\n");
  REQUIRE(primes.minprimes.has_value());
  CHECK(primes.minprimes->size() == 1);
  CHECK(primes.localmult == std::vector<std::uint64_t>{1});
}

TEST_CASE("problem file errors") {
  CHECK(kind_of(std::string(kR1) + "minprimes: (x)\nlocalmult: 1, 2\n") == ErrorKind::InconsistentBlocks);
  CHECK(kind_of(std::string(kR1) + "localmult: 1\n") == ErrorKind::InconsistentBlocks);
  CHECK(kind_of(std::string(kR1) + "rowdegs: 0, 0\n") == ErrorKind::InconsistentBlocks);
  CHECK(kind_of("char: 5\nvars: x, y\nideal: x^2+y\nmodule: quotient x\n") == ErrorKind::NotHomogeneous);
  CHECK(kind_of("char: 5\nvars: x, y\nideal: x^2\nmodule: coker [x; y^2]\n") == ErrorKind::NotHomogeneous);
  CHECK(kind_of("char: 5\nvars: x\nideal: x^2\n") == ErrorKind::Parse);
  CHECK(kind_of("char: 5\nchar: 7\nvars: x\nideal: x^2\nmodule: quotient x\n") == ErrorKind::Parse);
  CHECK(kind_of("char: 6\nvars: x\nideal: x^2\nmodule: quotient x\n") == ErrorKind::NotPrime);
  CHECK(kind_of("char: 5\nvars: x\nideal: x^2\nmodule: coker [x; x, x]\n") == ErrorKind::Parse);
  try {
    parse_problem("char: 5\nvars: x, y\nideal: x^2, x*w\nmodule: quotient x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
    CHECK(e.line() == 3);
    CHECK(e.column() == 15);  // the offending name
  }
}

TEST_CASE("cache entries") {
  auto dir = fresh_dir("cache");
  CHECK_FALSE(cache_get(dir, "d1", "resolution").has_value());
  cache_put(dir, "d1", "resolution", "payload\nwith lines");
  CHECK(cache_get(dir, "d1", "resolution") == std::string("payload\nwith lines"));
  CHECK(std::filesystem::exists(dir / "d1" / "resolution.dat"));

  // fault injection: flip a payload byte
  auto path = dir / "d1" / "resolution.dat";
  std::string text;
  {
    std::ifstream in(path, std::ios::binary);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  text.back() = text.back() == 'x' ? 'y' : 'x';
  std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
  try {
    cache_get(dir, "d1", "resolution");
    FAIL("expected CacheCorrupt");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CacheCorrupt);
  }
  // wrong format version
  std::ofstream(path, std::ios::binary | std::ios::trunc) << "fb-cache 0\n";
  CHECK_THROWS_AS(cache_get(dir, "d1", "resolution"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("resolution serialization round trip") {
  auto r1 = fbtest::r1();
  auto res = resolve(fbtest::residue_field(r1), 4);
  auto back = deserialize_resolution(r1, serialize_resolution(res));
  CHECK(back.complex == res.complex);
  CHECK(back.betti == res.betti);
  CHECK_THROWS_AS(deserialize_resolution(r1, "{\"degrees\": [[0]], \"maps\": [[]]}"), Error);
}

TEST_CASE("reports") {
  auto pb = parse_problem(kR1);
  RunFlags flags;
  auto a = run("hk", pb, flags);
  auto b = run("hk", pb, flags);
  CHECK(a["result"].dump() == b["result"].dump());
  CHECK(a["result"]["estimate"] == "1");
  CHECK(a["input_digest"] == pb.digest);
  auto table = csv_table(a["result"]);
  REQUIRE(table.has_value());
  CHECK(*table == "e,q,raw,normalized\n1,5,6,6/5\n2,25,26,26/25\n3,125,126,126/125\n");

  flags.exact = true;
  flags.idx = 1;
  auto exact = run("beta", pb, flags);
  CHECK(exact["result"]["vanishes"] == false);
  CHECK_FALSE(csv_table(exact["result"]).has_value());

  auto cached = fresh_dir("reports");
  RunFlags with_cache;
  with_cache.cache_dir = cached;
  with_cache.steps = 3;
  auto miss = run("resolve", pb, with_cache);
  auto hit = run("resolve", pb, with_cache);
  CHECK(miss["timing"]["cache"] == "miss");
  CHECK(hit["timing"]["cache"] == "hit");
  CHECK(miss["result"].dump() == hit["result"].dump());
  std::filesystem::remove_all(cached);

  CHECK(exit_code(ErrorKind::Parse) == 2);
  CHECK(exit_code(ErrorKind::WrongDimension) == 3);
  CHECK(exit_code(ErrorKind::ResourceBound) == 4);
  CHECK(exit_code(ErrorKind::Io) == 1);
  CHECK_THROWS_AS(run("bogus", pb, RunFlags{}), Error);
}
