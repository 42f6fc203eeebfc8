#include "gwmirror.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gwm/closed_gw.hpp"
#include "gwm/open_gw.hpp"
#include "gwm/report.hpp"
#include "gwm/verify.hpp"

using namespace gwm;

struct gwm_session {
  ModelSpec model{5, {5}};
  std::string label;
  std::string last_error;
};

namespace {

ModelSpec parse_model_string(const std::string& s) {
  std::optional<int> n;
  std::vector<int> degrees;
  bool saw_a = false;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (tok.empty()) continue;
    const size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw DomainError("model: expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "n") {
      size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(val, &pos);
      } catch (const std::exception&) {
        throw DomainError("model: bad coordinate count '" + val + "'");
      }
      if (pos != val.size())
        throw DomainError("model: bad coordinate count '" + val + "'");
      n = v;
    } else if (key == "a") {
      saw_a = true;
      if (!val.empty()) degrees = parse_degrees(val);
    } else {
      throw DomainError("model: unknown key '" + key + "'");
    }
  }
  if (!n || !saw_a)
    throw DomainError("model: expected \"n=<int>;a=<csv>\", got '" + s + "'");
  return ModelSpec(*n, degrees);
}

std::vector<Rat> parse_weight_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(rat_parse(tok));
  return out;
}

char* dup_cstring(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

gwm_status render(gwm_session* s, const std::string& format,
                  const std::vector<Record>& records,
                  const std::vector<CheckResult>& checks, char** out) {
  std::string doc;
  if (format == "json")
    doc = render_json(s->model, records, checks);
  else if (format == "csv")
    doc = render_csv(s->model, records, checks);
  else {
    s->last_error = "unknown format '" + format + "'";
    return GWM_ERR_INVALID;
  }
  *out = dup_cstring(doc);
  if (!*out) {
    s->last_error = "out of memory";
    return GWM_ERR_COMPUTE;
  }
  return GWM_OK;
}

// Maps exceptions escaping a computation onto status codes.
template <typename F>
gwm_status guarded(gwm_session* s, F body) {
  try {
    return body();
  } catch (const DomainError& e) {
    s->last_error = e.what();
    return GWM_ERR_DOMAIN;
  } catch (const CalcError& e) {
    s->last_error = e.what();
    return GWM_ERR_DOMAIN;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return GWM_ERR_COMPUTE;
  }
}

void fill_verify_weights(VerifyOptions& vo, const std::string& weights) {
  if (weights == "default" || weights == "random") {
    vo.weight_mode = weights;
  } else {
    vo.weight_mode = "explicit";
    vo.weight_values = parse_weight_list(weights);
  }
}

}  // namespace

extern "C" {

const char* gwm_status_name(gwm_status s) {
  switch (s) {
    case GWM_OK:
      return "ok";
    case GWM_ERR_INVALID:
      return "invalid argument";
    case GWM_ERR_DOMAIN:
      return "domain error";
    case GWM_ERR_COMPUTE:
      return "computation failed";
  }
  return "unknown";
}

gwm_status gwm_session_open(const char* model, gwm_session** out,
                            char* errbuf, size_t errlen) {
  if (errbuf && errlen) errbuf[0] = '\0';
  if (!model || !out) {
    if (errbuf && errlen) std::strncpy(errbuf, "null argument", errlen - 1);
    return GWM_ERR_INVALID;
  }
  *out = nullptr;
  try {
    ModelSpec m = parse_model_string(model);
    auto* s = new gwm_session;
    s->model = m;
    s->label = m.label();
    *out = s;
    return GWM_OK;
  } catch (const std::exception& e) {
    if (errbuf && errlen) {
      std::strncpy(errbuf, e.what(), errlen - 1);
      errbuf[errlen - 1] = '\0';
    }
    return GWM_ERR_INVALID;
  }
}

void gwm_session_close(gwm_session* s) { delete s; }

const char* gwm_model_label(const gwm_session* s) {
  return s ? s->label.c_str() : "";
}

const char* gwm_last_error(const gwm_session* s) {
  return s ? s->last_error.c_str() : "";
}

gwm_status gwm_bps(gwm_session* s, int b1, int b2, int dmax,
                   const char* format, char** out) {
  if (!s) return GWM_ERR_INVALID;
  s->last_error.clear();
  if (!format || !out || dmax < 1) {
    s->last_error = "bps: need format, output slot and dmax >= 1";
    return GWM_ERR_INVALID;
  }
  return guarded(s, [&]() -> gwm_status {
    const std::string ins =
        std::to_string(b1) + "," + std::to_string(b2);
    std::vector<Rat> gw = pair_invariants(s->model, b1, b2, dmax);
    std::vector<Rat> bps = bps_from_invariants(gw);
    std::vector<Record> records;
    for (int d = 1; d <= dmax; ++d)
      records.push_back({"gw", d, ins, rat_str(gw[static_cast<size_t>(d)])});
    for (int d = 1; d <= dmax; ++d) {
      const Rat& v = bps[static_cast<size_t>(d)];
      if (v.get_den() != 1)
        throw DomainError("bps: non-integral count at degree " +
                          std::to_string(d));
      records.push_back({"bps", d, ins, rat_str(v)});
    }
    return render(s, format, records, {}, out);
  });
}

gwm_status gwm_descendants(gwm_session* s, int p1, int b1, int p2, int b2,
                           int dmax, const char* format, char** out) {
  if (!s) return GWM_ERR_INVALID;
  s->last_error.clear();
  if (!format || !out || dmax < 1) {
    s->last_error = "descendants: need format, output slot and dmax >= 1";
    return GWM_ERR_INVALID;
  }
  if (p1 < 0 || p2 < 0 || b1 < 0 || b2 < 0) {
    s->last_error = "descendants: powers must be nonnegative";
    return GWM_ERR_INVALID;
  }
  return guarded(s, [&]() -> gwm_status {
    ClosedEngine eng(s->model, dmax);
    std::ostringstream ins;
    ins << p1 << ':' << b1 << ',' << p2 << ':' << b2;
    std::vector<Record> records;
    for (int d = 1; d <= dmax; ++d)
      records.push_back({"descendant", d, ins.str(),
                         rat_str(eng.descendant(d, p1, b1, p2, b2))});
    return render(s, format, records, {}, out);
  });
}

gwm_status gwm_open_sector(gwm_session* s, const char* what, int dmax,
                           const char* weights, unsigned seed,
                           const char* format, char** out) {
  if (!s) return GWM_ERR_INVALID;
  s->last_error.clear();
  if (!what || !weights || !format || !out || dmax < 1) {
    s->last_error = "open: need what, weights, format, output slot, dmax >= 1";
    return GWM_ERR_INVALID;
  }
  const std::string mode = what;
  if (mode != "disk" && mode != "annulus" && mode != "klein" &&
      mode != "all") {
    s->last_error = "open: what must be disk, annulus, klein or all";
    return GWM_ERR_INVALID;
  }
  if (!s->model.open_sector_ok()) {
    s->last_error =
        "open: " + s->label + " is not a Calabi-Yau threefold intersection";
    return GWM_ERR_INVALID;
  }
  return guarded(s, [&]() -> gwm_status {
    const std::string wstr = weights;
    // Open invariants are weight independent; the default is a seeded draw
    // of paired weights so distinct seeds exercise that independence.
    WeightSystem w =
        (wstr == "default" || wstr == "random")
            ? WeightSystem::random_conjugate_pairs(s->model.n, seed)
            : WeightSystem(parse_weight_list(wstr));
    OpenModel om(s->model, w);

    std::vector<Record> records;
    if (mode == "disk" || mode == "all") {
      QSeries pot = disk_potential(om, 2 * dmax + 1, Route::graphsum);
      for (int g = 1; g <= pot.order(); g += 2)
        records.push_back({"disk", g, "", rat_str(pot.coeff(g))});
    }
    if (mode == "annulus" || mode == "all") {
      std::vector<Rat> a = annulus_invariants(om, dmax, Route::graphsum);
      for (int d = 1; d <= dmax; ++d)
        records.push_back(
            {"annulus", 2 * d, "", rat_str(a[static_cast<size_t>(d)])});
    }
    if (mode == "klein" || mode == "all") {
      std::vector<Rat> k = klein_invariants(om, dmax, Route::graphsum);
      for (int d = 1; d <= dmax; ++d)
        records.push_back(
            {"klein", 2 * d, "", rat_str(k[static_cast<size_t>(d)])});
    }
    return render(s, format, records, {}, out);
  });
}

gwm_status gwm_verify(gwm_session* s, const char* suites, int dmax,
                      int qorder, const char* weights, unsigned seed,
                      const char* format, int* failures, char** out) {
  if (!s) return GWM_ERR_INVALID;
  s->last_error.clear();
  if (!suites || !weights || !format || !out) {
    s->last_error = "verify: need suites, weights, format and output slot";
    return GWM_ERR_INVALID;
  }
  return guarded(s, [&]() -> gwm_status {
    VerifyOptions vo;
    vo.model = s->model;
    vo.seed = seed;
    vo.dmax = dmax;
    vo.qorder = qorder;
    fill_verify_weights(vo, weights);

    std::vector<std::string> names;
    std::stringstream ss(suites);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) names.push_back(tok);

    std::vector<CheckResult> checks = run_suites(names, vo);
    int bad = 0;
    for (const CheckResult& c : checks)
      if (!c.pass) ++bad;
    if (failures) *failures = bad;
    return render(s, format, {}, checks, out);
  });
}

void gwm_free(char* buf) { std::free(buf); }

}  // extern "C"
