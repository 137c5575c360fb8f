// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "ogtame/ogtame.h"

#include <exception>
#include <string>
#include <utility>

#include "errors.hpp"
#include "scenario.hpp"

struct ogt_scenario {
  ogtame::Scenario sc;
};

struct ogt_report {
  std::string text;
  std::string json;
  int all_pass = 0;
};

namespace {

thread_local std::string g_last_error;

// Runs the body, translating exceptions into status codes and the
// thread-local message.  Clears the message on success.
template <class F>
ogt_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return OGT_OK;
  } catch (const ogtame::Error& e) {
    g_last_error = e.what();
    return static_cast<ogt_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OGT_INTERNAL;
  } catch (...) {
    g_last_error = "unknown internal failure";
    return OGT_INTERNAL;
  }
}

ogt_status require(bool ok, const char* message) {
  if (ok) return OGT_OK;
  g_last_error = message;
  return OGT_INTERNAL;
}

ogtame::RunOptions to_options(const ogt_run_options* opt) {
  ogtame::RunOptions o;
  if (opt != nullptr) {
    o.seed = opt->seed;
    o.cases = opt->cases;
    o.fail_fast = opt->fail_fast != 0;
  }
  return o;
}

ogt_report* wrap_result(ogtame::ScenarioResult&& r) {
  auto* out = new ogt_report;
  out->text = std::move(r.text);
  out->json = r.machine.dump(2) + "\n";
  out->all_pass = r.all_pass ? 1 : 0;
  return out;
}

}  // namespace

extern "C" {

const char* ogt_version(void) { return OGT_VERSION_STRING; }

const char* ogt_status_name(int status) {
  if (status == OGT_OK) return "ok";
  if (status >= 1 && status <= static_cast<int>(OGT_INTERNAL)) {
    return ogtame::error_code_name(static_cast<ogtame::ErrorCode>(status));
  }
  return "unknown";
}

const char* ogt_last_error(void) { return g_last_error.c_str(); }

void ogt_run_options_init(ogt_run_options* opt) {
  if (opt == nullptr) return;
  const ogtame::RunOptions d;
  opt->seed = d.seed;
  opt->cases = d.cases;
  opt->fail_fast = d.fail_fast ? 1 : 0;
}

ogt_status ogt_scenario_parse(const char* json_text, const char* name,
                              ogt_scenario** out) {
  if (ogt_status s = require(json_text && out, "null argument"); s != OGT_OK) {
    return s;
  }
  return guarded([&] {
    ogtame::Scenario sc =
        ogtame::load_scenario(json_text, name ? name : "scenario");
    *out = new ogt_scenario{std::move(sc)};
  });
}

ogt_status ogt_scenario_load_file(const char* path, ogt_scenario** out) {
  if (ogt_status s = require(path && out, "null argument"); s != OGT_OK) {
    return s;
  }
  return guarded([&] {
    ogtame::Scenario sc = ogtame::load_scenario_file(path);
    *out = new ogt_scenario{std::move(sc)};
  });
}

void ogt_scenario_free(ogt_scenario* sc) { delete sc; }

long ogt_scenario_query_count(const ogt_scenario* sc) {
  return sc == nullptr ? 0 : static_cast<long>(sc->sc.queries.size());
}

ogt_status ogt_scenario_run(const ogt_scenario* sc,
                            const ogt_run_options* opt, ogt_report** out) {
  if (ogt_status s = require(sc && out, "null argument"); s != OGT_OK) {
    return s;
  }
  return guarded([&] {
    ogtame::ScenarioResult r = ogtame::run_scenario(sc->sc, to_options(opt));
    *out = wrap_result(std::move(r));
  });
}

ogt_status ogt_scenario_query(const ogt_scenario* sc, const char* query_json,
                              const ogt_run_options* opt, ogt_report** out) {
  if (ogt_status s = require(sc && query_json && out, "null argument");
      s != OGT_OK) {
    return s;
  }
  return guarded([&] {
    ogtame::OrderedJson body;
    try {
      body = ogtame::OrderedJson::parse(query_json);
    } catch (const nlohmann::json::parse_error& e) {
      std::string msg = e.what();
      if (size_t close = msg.find("] "); close != std::string::npos) {
        msg = msg.substr(close + 2);
      }
      ogtame::fail(ogtame::ErrorCode::parse_error, msg);
    }
    if (!body.is_object() || !body.contains("op") ||
        !body.at("op").is_string()) {
      ogtame::fail(ogtame::ErrorCode::schema_error,
                   "query must be an object with a string 'op'");
    }
    ogtame::Query q;
    q.op = body.at("op").get<std::string>();
    q.body = std::move(body);
    ogtame::ScenarioResult r =
        ogtame::run_single_query(sc->sc, q, to_options(opt));
    *out = wrap_result(std::move(r));
  });
}

void ogt_report_free(ogt_report* r) { delete r; }

const char* ogt_report_text(const ogt_report* r) {
  return r == nullptr ? "" : r->text.c_str();
}

const char* ogt_report_json(const ogt_report* r) {
  return r == nullptr ? "" : r->json.c_str();
}

int ogt_report_all_pass(const ogt_report* r) {
  return r != nullptr && r->all_pass != 0;
}

}  // extern "C"
