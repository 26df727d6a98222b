#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>
#include <thread>
#include <vector>

#include "coxtwist/coxtwist.h"

namespace {

struct Handle {
  ctw_system* ptr = nullptr;
  ~Handle() { ctw_system_free(ptr); }
};

struct Out {
  char* ptr = nullptr;
  ~Out() { ctw_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

Handle type(const char* name, const char* theta = "id") {
  Handle h;
  REQUIRE(ctw_system_from_type(name, &h.ptr) == CTW_OK);
  REQUIRE(ctw_system_set_theta(h.ptr, theta) == CTW_OK);
  return h;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(ctw_status_name(CTW_OK)) == "ok");
  CHECK(std::string(ctw_status_name(CTW_NOT_REDUCED)) == "not reduced");
  ctw_system* sys = nullptr;
  CHECK(ctw_system_from_type("Q7", &sys) == CTW_INVALID_INPUT);
  CHECK(sys == nullptr);
  CHECK(std::string(ctw_last_error()).size() > 0);
  CHECK(ctw_system_load_json("{\"matrix\": [[1,3],[2,1]]}", &sys) == CTW_INVALID_INPUT);
  CHECK(ctw_system_load_file("/nonexistent/system.json", &sys) == CTW_INVALID_INPUT);
  ctw_string_free(nullptr);
  ctw_system_free(nullptr);
}

TEST_CASE("systems") {
  Handle h;
  REQUIRE(ctw_system_load_json(R"({"name": "A3", "matrix": [[1,3,2],[3,1,3],[2,3,1]], "theta": [3,2,1]})",
                               &h.ptr) == CTW_OK);
  CHECK(ctw_system_rank(h.ptr) == 3);
  Out d;
  REQUIRE(ctw_system_describe(h.ptr, &d.ptr) == CTW_OK);
  CHECK(nlohmann::json::parse(d.str())["theta"] == std::vector<int>{3, 2, 1});
  CHECK(ctw_system_set_theta(h.ptr, "2 1 3") == CTW_INVALID_INPUT);
  CHECK(ctw_system_set_theta(h.ptr, "1 2") == CTW_INVALID_INPUT);
  CHECK(ctw_system_set_theta(h.ptr, "id") == CTW_OK);
}

TEST_CASE("normalize") {
  Handle h = type("A3", "3 2 1");
  Out o;
  REQUIRE(ctw_normalize(h.ptr, "1 2 3 2", 1, CTW_FORMAT_JSON, &o.ptr) == CTW_OK);
  const auto j = nlohmann::json::parse(o.str());
  CHECK(j["reduced"] == false);
  CHECK(j["rank"] == 2);
  CHECK(j["ord"] == std::vector<int>{2, 2, 3, 1, 2, 3, 2});
  Out e;
  CHECK(ctw_normalize(h.ptr, "1 9", 0, CTW_FORMAT_TEXT, &e.ptr) == CTW_INVALID_INPUT);
  Out w0;
  REQUIRE(ctw_normalize(h.ptr, "w0", 0, CTW_FORMAT_JSON, &w0.ptr) == CTW_OK);
  CHECK(nlohmann::json::parse(w0.str())["length"] == 6);
}

TEST_CASE("enumerate") {
  Handle h = type("A3");
  Out inv;
  REQUIRE(ctw_enumerate(h.ptr, CTW_ENUM_INVOLUTIONS, nullptr, -1, CTW_FORMAT_JSON, &inv.ptr) == CTW_OK);
  CHECK(nlohmann::json::parse(inv.str())["involutions"].size() == 10);
  Out ex;
  REQUIRE(ctw_enumerate(h.ptr, CTW_ENUM_EXPRESSIONS, "w0", -1, CTW_FORMAT_JSON, &ex.ptr) == CTW_OK);
  CHECK(nlohmann::json::parse(ex.str())["count"] == 8);
  Out two;
  REQUIRE(ctw_enumerate(h.ptr, CTW_ENUM_EXPRESSIONS, "1 2", -1, CTW_FORMAT_JSON, &two.ptr) == CTW_OK);
  CHECK(nlohmann::json::parse(two.str())["count"] == 2);
  Out bad;
  CHECK(ctw_enumerate(h.ptr, CTW_ENUM_EXPRESSIONS, "1 4", -1, CTW_FORMAT_JSON, &bad.ptr) == CTW_INVALID_INPUT);
  Handle inf = type("~A2");
  Out unbounded;
  CHECK(ctw_enumerate(inf.ptr, CTW_ENUM_INVOLUTIONS, nullptr, -1, CTW_FORMAT_TEXT, &unbounded.ptr) ==
        CTW_NOT_FINITE);
}

TEST_CASE("connect and graph") {
  Handle h = type("A3", "3 2 1");
  Out braid;
  CHECK(ctw_connect(h.ptr, "2 3 1 2", "2 3 2 1", CTW_REGIME_BRAID, CTW_FORMAT_TEXT, &braid.ptr) ==
        CTW_NOT_CONNECTED);
  CHECK(braid.str().find("not connected under braid") != std::string::npos);
  Out full;
  REQUIRE(ctw_connect(h.ptr, "2 3 1 2", "2 3 2 1", CTW_REGIME_FULL, CTW_FORMAT_JSON, &full.ptr) == CTW_OK);
  CHECK(nlohmann::json::parse(full.str())["steps"].size() == 1);
  Out diff;
  CHECK(ctw_connect(h.ptr, "1", "2", CTW_REGIME_FULL, CTW_FORMAT_TEXT, &diff.ptr) == CTW_DIFFERENT_ELEMENT);
  Out nr;
  CHECK(ctw_connect(h.ptr, "1 1", "1 1", CTW_REGIME_FULL, CTW_FORMAT_TEXT, &nr.ptr) == CTW_NOT_REDUCED);

  Out dot;
  REQUIRE(ctw_graph(h.ptr, "w0", CTW_GRAPH_MAXIMALITY, CTW_REGIME_FULL, CTW_FORMAT_DOT, &dot.ptr) == CTW_OK);
  CHECK(dot.str() == "graph G {\n  s1;\n  s2;\n  s3;\n  s1 -- s3;\n}\n");
  Out g;
  REQUIRE(ctw_graph(h.ptr, "w0", CTW_GRAPH_EXPRESSIONS, CTW_REGIME_HALFBRAID, CTW_FORMAT_JSON, &g.ptr) == CTW_OK);
  CHECK(nlohmann::json::parse(g.str())["components"].size() == 2);
  Out d;
  CHECK(ctw_graph(h.ptr, "1 3", CTW_GRAPH_MAXIMALITY, CTW_REGIME_FULL, CTW_FORMAT_DOT, &d.ptr) == CTW_OK);
}

TEST_CASE("verify and classify") {
  ctw_verify_options opts;
  ctw_verify_options_default(&opts);
  CHECK(opts.cap == 1000000);
  Handle b3 = type("B3");
  Out half;
  CHECK(ctw_verify(b3.ptr, CTW_SUITE_HALF_BRAID, &opts, CTW_FORMAT_TEXT, &half.ptr) ==
        CTW_HYPOTHESIS_VIOLATED);
  Out all;
  REQUIRE(ctw_verify(b3.ptr, CTW_SUITE_ALL, &opts, CTW_FORMAT_JSON, &all.ptr) == CTW_OK);
  const auto report = nlohmann::json::parse(all.str());
  CHECK(report["passed"] == true);
  CHECK(report["notes"].dump().find("skipped") != std::string::npos);
  Handle a3 = type("A3");
  Out ra;
  CHECK(ctw_verify(a3.ptr, CTW_SUITE_RIGHT_ANGLED, &opts, CTW_FORMAT_TEXT, &ra.ptr) == CTW_NOT_RIGHT_ANGLED);
  Handle inf = type("I2(inf)");
  opts.length_bound = 4;
  Out ok;
  CHECK(ctw_verify(inf.ptr, CTW_SUITE_RIGHT_ANGLED, &opts, CTW_FORMAT_TEXT, &ok.ptr) == CTW_OK);
  Out c;
  REQUIRE(ctw_classify(b3.ptr, CTW_FORMAT_JSON, &c.ptr) == CTW_OK);
  CHECK(nlohmann::json::parse(c.str())["type"] == "B3");
}

TEST_CASE("handles are usable from several threads") {
  Handle h = type("D4");
  std::vector<std::thread> pool;
  std::vector<int> status(4, -1);
  for (int i = 0; i < 4; ++i)
    pool.emplace_back([&, i] {
      char* out = nullptr;
      status[static_cast<std::size_t>(i)] =
          ctw_graph(h.ptr, "w0", CTW_GRAPH_EXPRESSIONS, CTW_REGIME_FULL, CTW_FORMAT_JSON, &out);
      ctw_string_free(out);
    });
  for (auto& t : pool) t.join();
  for (int s : status) CHECK(s == CTW_OK);
}
