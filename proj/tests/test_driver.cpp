#include <catch2/catch_amalgamated.hpp>

#include <joinring/driver.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace joinring;

namespace {

struct Run {
  int rc;
  Json out;
  std::string text;
};

Run run(const Job& job) {
  std::ostringstream os;
  const int rc = run_job(job, os);
  return {rc, Json::parse(os.str()), os.str()};
}

Job make(const std::string& command, const std::string& field = "",
         const std::string& groups = "", const std::string& input = "") {
  Job job;
  job.command = command;
  if (!field.empty()) job.field = FieldSpec::parse(field);
  if (!groups.empty()) job.groups = parse_group_specs(groups);
  if (!input.empty()) job.input = input;
  return job;
}

std::vector<GroupPtr> zgroups(const std::vector<unsigned>& orders) {
  std::vector<GroupPtr> gs;
  for (unsigned n : orders) gs.push_back(share(Group::cyclic(n)));
  return gs;
}

}  // namespace

TEST_CASE("scalar serialization round-trips with deterministic rounding") {
  CHECK(scalar_to_json(Rational(2, 4)) == "1/2");
  CHECK(scalar_from_json<Rational>(Json("6/4"), Rational(0)) == Rational(3, 2));
  CHECK(scalar_from_json<Rational>(Json(7), Rational(0)) == Rational(7));
  CHECK_THROWS_AS(scalar_from_json<Rational>(Json("1/0"), Rational(0)), input_error);
  CHECK_THROWS_AS(scalar_from_json<Rational>(Json("abc"), Rational(0)), input_error);

  const Json z = scalar_to_json(Cplx(0.1234567890123456, -2.0));
  CHECK(z[0].get<double>() == 0.123456789012);
  CHECK(z[1].get<double>() == -2.0);
  CHECK_THROWS_AS(scalar_from_json<Cplx>(Json(1.5), Cplx(0, 0)), input_error);

  CHECK(scalar_to_json(Fp(9, 7)) == Json(2));
  CHECK(scalar_from_json<Fp>(Json(-1), Fp(0, 7)) == Fp(6, 7));
  CHECK_THROWS_AS(scalar_from_json<Fp>(Json("3"), Fp(0, 7)), input_error);
}

TEST_CASE("join elements survive the serialization round trip") {
  const auto gs = zgroups({2, 3});
  const Rational q0(0);
  std::vector<Rational> v{Rational(1, 2), Rational(-1), Rational(0),
                          Rational(3),    Rational(2),  Rational(5, 7),
                          Rational(0)};
  const auto a = JoinElement<Rational>::from_coordinates(gs, q0, v);
  CHECK(join_from_json<Rational>(join_to_json(a), q0) == a);
  CHECK_THROWS_AS(join_from_json<Fp>(join_to_json(a), Fp(0, 5)), input_error);

  const Group d8 = Group::dihedral(8);
  const Group back = group_from_json(group_to_json(d8));
  CHECK(back == d8);
  const Group cayley = group_from_json(group_to_json(d8.opposite()));
  CHECK(cayley == d8.opposite());
}

TEST_CASE("group specs parse builtin families and cayley files") {
  const auto gs = parse_group_specs("Z/2,D/8,S/3");
  REQUIRE(gs.size() == 3);
  CHECK(gs[0]->order() == 2);
  CHECK(gs[1]->order() == 8);
  CHECK(gs[2]->order() == 6);

  const std::string path = "cayley_spec_test.json";
  {
    std::ofstream f(path);
    f << group_to_json(Group::cyclic(3).opposite()).dump();
  }
  const auto with_file = parse_group_specs("Z/2,cayley:" + path);
  REQUIRE(with_file.size() == 2);
  CHECK(with_file[1]->order() == 3);
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_group_specs("Z/2,,Z/3"), input_error);
  CHECK_THROWS_AS(parse_group_specs("X/3"), input_error);
  CHECK_THROWS_AS(parse_group_specs("Z/abc"), input_error);
  CHECK_THROWS_AS(parse_group_specs("Z/0"), input_error);
  CHECK_THROWS_AS(parse_group_specs("cayley:no_such_file.json"), input_error);
}

TEST_CASE("classify reports the structural profile") {
  const auto r = run(make("classify", "Fp:2", "Z/2,Z/2"));
  CHECK(r.rc == 0);
  CHECK(r.out["center_dim"] == 3);
  CHECK(r.out["radical_dim"] == 4);
  CHECK(r.out["is_semisimple"] == false);
  CHECK(r.out["is_frobenius"] == false);
  CHECK(r.out["irreducible_count"] == 2);

  const auto q = run(make("classify", "Q", "Z/2,Z/3"));
  CHECK(q.rc == 0);
  CHECK(q.out["center_dim"] == 4);
  CHECK(q.out["radical_dim"] == 0);
  CHECK(q.out["is_semisimple"] == true);
  CHECK(q.out["is_frobenius"] == true);
  CHECK(q.out["irreducible_count"] == 4);

  CHECK(run(make("classify", "Fp:2", "")).rc == 1);
  CHECK(run(make("classify", "", "Z/2")).rc == 1);
}

TEST_CASE("count-units emits the closed form as a decimal string") {
  const auto r = run(make("count-units", "Fp:2", "Z/2,Z/2"));
  CHECK(r.rc == 0);
  CHECK(r.out["count"] == "16");
  const auto big = run(make("count-units", "Fp:3", "Z/9,Z/3"));
  CHECK(big.rc == 0);
  CHECK(big.out["count"] == std::to_string(4L * 531441L));  // 2^2 3^12

  const auto bad = run(make("count-units", "Q", "Z/2,Z/2"));
  CHECK(bad.rc == 2);
  CHECK(bad.out["error"]["code"] == "hypothesis");
  CHECK(run(make("count-units", "Fp:2", "Z/2,Z/3")).rc == 2);
}

TEST_CASE("radical and center commands expose dimensions and bases") {
  const auto r = run(make("radical", "Fp:2", "Z/2,Z/3"));
  CHECK(r.rc == 0);
  CHECK(r.out["dimension"] == 3);
  REQUIRE(r.out["basis"].is_array());
  CHECK(r.out["basis"].size() == 3);
  const auto parsed = join_from_json<Fp>(r.out["basis"][0], Fp(0, 2));
  CHECK(parsed.d() == 2);

  const auto c = run(make("center", "Q", "Z/4,Z/3"));
  CHECK(c.rc == 0);
  CHECK(c.out["dimension"] == 6);
  CHECK(c.out["basis"].size() == 6);
}

TEST_CASE("check accepts join elements and dense matrices") {
  const auto gs = zgroups({2, 3});
  const Rational q0(0);
  const auto a = JoinElement<Rational>::from_coordinates(
      gs, q0,
      {Rational(1), Rational(2), Rational(0), Rational(1), Rational(1), Rational(3),
       Rational(1, 2)});
  const auto direct = run(make("check", "", "", join_to_json(a).dump()));
  CHECK(direct.rc == 0);
  CHECK(direct.out["ok"] == true);
  CHECK(join_from_json<Rational>(direct.out["join"], q0) == a);

  Json wrapped{{"matrix", matrix_to_json(expand(a))}};
  const auto dense = run(make("check", "", "Z/2,Z/3", wrapped.dump()));
  CHECK(dense.rc == 0);
  CHECK(join_from_json<Rational>(dense.out["join"], q0) == a);

  // A matrix outside the ring: one corner of an off block disturbed.
  auto m = expand(a);
  m(0, 2) = Rational(9);
  Json badwrap{{"matrix", matrix_to_json(m)}};
  const auto bad = run(make("check", "", "Z/2,Z/3", badwrap.dump()));
  CHECK(bad.rc == 1);
  CHECK(bad.out["error"]["code"] == "bad-input");

  CHECK(run(make("check", "", "", "not json at all")).rc == 1);
  CHECK(run(make("check")).rc == 1);  // no input

  // Flag/payload consistency.
  CHECK(run(make("check", "Fp:5", "", join_to_json(a).dump())).rc == 1);
  CHECK(run(make("check", "", "Z/3,Z/2", join_to_json(a).dump())).rc == 1);
}

TEST_CASE("mul multiplies two serialized elements") {
  const auto gs = zgroups({2, 2});
  const Fp f2(0, 2);
  const auto a = JoinElement<Fp>::from_coordinates(
      gs, f2, {Fp(1, 2), Fp(1, 2), Fp(0, 2), Fp(1, 2), Fp(1, 2), Fp(0, 2)});
  const auto b = JoinElement<Fp>::identity(gs, f2);
  Json payload{{"a", join_to_json(a)}, {"b", join_to_json(b)}};
  const auto r = run(make("mul", "", "", payload.dump()));
  CHECK(r.rc == 0);
  CHECK(join_from_json<Fp>(r.out["product"], f2) == join_mul(a, b));
  CHECK(run(make("mul", "", "", join_to_json(a).dump())).rc == 1);
}

TEST_CASE("units reports invertibility, inverses, and modular structure") {
  const auto gs = zgroups({2, 2});
  const Fp f2(0, 2);
  const auto u = JoinElement<Fp>::from_coordinates(
      gs, f2, {Fp(0, 2), Fp(1, 2), Fp(1, 2), Fp(0, 2), Fp(1, 2), Fp(1, 2)});
  const auto r = run(make("units", "", "", join_to_json(u).dump()));
  CHECK(r.rc == 0);
  CHECK(r.out["is_unit"] == true);
  REQUIRE(r.out["inverse"].is_object());
  const auto inv = join_from_json<Fp>(r.out["inverse"], f2);
  CHECK(join_mul(u, inv) == JoinElement<Fp>::identity(gs, f2));
  REQUIRE(r.out.contains("structure"));
  CHECK(r.out["structure"]["torus"].size() == 2);
  CHECK(r.out["structure"]["principal"].size() == 2);

  const auto z = run(make("units", "", "", join_to_json(JoinElement<Fp>::zero(gs, f2)).dump()));
  CHECK(z.rc == 0);
  CHECK(z.out["is_unit"] == false);
  CHECK(z.out["inverse"].is_null());
  CHECK_FALSE(z.out.contains("structure"));

  // Outside the modular case no factorization is attached.
  const auto rational =
      run(make("units", "", "",
               join_to_json(JoinElement<Rational>::identity(zgroups({2, 3}), Rational(0)))
                   .dump()));
  CHECK(rational.rc == 0);
  CHECK(rational.out["is_unit"] == true);
  CHECK_FALSE(rational.out.contains("structure"));
}

TEST_CASE("frobenius reports failures with witness data") {
  const auto ok = run(make("frobenius", "Q", "Z/2,Z/3"));
  CHECK(ok.rc == 0);
  CHECK(ok.out["is_frobenius"] == true);
  CHECK(ok.out["witness_row"].is_null());

  const auto fail = run(make("frobenius", "Fp:2", "Z/2,Z/3"));
  CHECK(fail.rc == 0);
  CHECK(fail.out["is_frobenius"] == false);
  CHECK(fail.out["witness_row"] == 0);
  CHECK_FALSE(fail.out.contains("witness"));

  Json lam{{"lambda", Json::array({1, 0, 1, 1, 0, 1, 0})}};
  const auto witnessed = run(make("frobenius", "Fp:2", "Z/2,Z/3", lam.dump()));
  CHECK(witnessed.rc == 0);
  REQUIRE(witnessed.out.contains("witness"));
  const auto& w = witnessed.out["witness"];
  REQUIRE(w["a"].is_array());
  CHECK(w["a"].size() == 2);
  const auto v = join_from_json<Fp>(w["element"], Fp(0, 2));
  // The witness is nonzero and lambda annihilates it.
  CHECK_FALSE(v == JoinElement<Fp>::zero(zgroups({2, 3}), Fp(0, 2)));
  Fp pairing(0, 2);
  const auto coords = v.coordinates();
  for (std::size_t i = 0; i < coords.size(); ++i)
    pairing += Fp(lam["lambda"][i].get<int>(), 2) * coords[i];
  CHECK(pairing == Fp(0, 2));
}

TEST_CASE("diagonalize requires the complex field and splits the input") {
  const auto gs = zgroups({2, 3});
  const Cplx c0(0, 0);
  std::vector<Cplx> v{c0, c0, c0, c0, c0, Cplx(1, 0), Cplx(1, 0)};
  const auto a = JoinElement<Cplx>::from_coordinates(gs, c0, v);
  const auto r = run(make("diagonalize", "", "", join_to_json(a).dump()));
  CHECK(r.rc == 0);
  CHECK(r.out["circulant_eigs"].size() == 3);
  CHECK(r.out["reduced"]["rows"] == 2);
  CHECK(r.out["residual"].get<double>() < 1e-9);
  const auto reduced = matrix_from_json<Cplx>(r.out["reduced"], c0);
  CHECK(std::abs(reduced(0, 1) - Cplx(3, 0)) < 1e-9);
  CHECK(std::abs(reduced(1, 0) - Cplx(2, 0)) < 1e-9);

  Job norm = make("diagonalize", "", "", join_to_json(a).dump());
  norm.normalized = true;
  const auto rn = run(norm);
  CHECK(rn.rc == 0);
  const auto nreduced = matrix_from_json<Cplx>(rn.out["reduced"], c0);
  CHECK(std::abs(nreduced(0, 1) - Cplx(std::sqrt(6.0), 0)) < 1e-9);
  CHECK(std::abs(nreduced(1, 0) - Cplx(std::sqrt(6.0), 0)) < 1e-9);

  // Wrong field in the payload: a violated hypothesis, not malformed input.
  const auto q = JoinElement<Rational>::identity(gs, Rational(0));
  const auto wrong = run(make("diagonalize", "", "", join_to_json(q).dump()));
  CHECK(wrong.rc == 2);
  CHECK(wrong.out["error"]["code"] == "hypothesis");

  // Non-cyclic group: also a violated hypothesis.
  const auto s3 = share(Group::symmetric(3));
  const auto bad = run(make(
      "diagonalize", "", "", join_to_json(JoinElement<Cplx>::identity({s3}, c0)).dump()));
  CHECK(bad.rc == 2);
}

TEST_CASE("spectrum consumes weighted graph data") {
  Json payload{{"outer", Json::array({Json::array({0, 1}), Json::array({1, 0})})},
               {"inner", Json::array({Json::array({0, 0}), Json::array({0, 0, 0})})}};
  const auto r = run(make("spectrum", "", "", payload.dump()));
  CHECK(r.rc == 0);
  REQUIRE(r.out["eigenvalues"].size() == 5);
  const double r6 = round_significant(std::sqrt(6.0));  // 2.44948974278
  CHECK(r.out["eigenvalues"][0][0].get<double>() == -r6);
  CHECK(r.out["eigenvalues"][4][0].get<double>() == r6);
  for (int i = 1; i <= 3; ++i) CHECK(r.out["eigenvalues"][i][0].get<double>() == 0.0);

  Json loops{{"outer", Json::array({Json::array({1, 1}), Json::array({1, 0})})},
             {"inner", Json::array({Json::array({0, 0}), Json::array({0, 0, 0})})}};
  CHECK(run(make("spectrum", "", "", loops.dump())).rc == 1);
  CHECK(run(make("spectrum", "", "", "{\"outer\": []}")).rc == 1);
}

TEST_CASE("unknown commands and malformed jobs fail cleanly") {
  const auto r = run(make("explode", "Q", "Z/2"));
  CHECK(r.rc == 1);
  CHECK(r.out["error"]["code"] == "bad-input");
  CHECK(r.out["error"]["reason"].is_string());
}

TEST_CASE("repeated runs are byte-identical") {
  const auto a = run(make("classify", "Fp:2", "Z/2,Z/3"));
  const auto b = run(make("classify", "Fp:2", "Z/2,Z/3"));
  CHECK(a.text == b.text);

  Json payload{{"outer", Json::array({Json::array({0, 2}), Json::array({1, 0})})},
               {"inner", Json::array({Json::array({1, 2}), Json::array({0, 1, 1})})}};
  const auto c = run(make("spectrum", "", "", payload.dump()));
  const auto d = run(make("spectrum", "", "", payload.dump()));
  CHECK(c.rc == 0);
  CHECK(c.text == d.text);
}
