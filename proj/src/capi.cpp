#include "hkcount/hkcount.h"

#include <exception>
#include <new>
#include <string>

#include "hkcount/error.hpp"
#include "hkcount/report.hpp"
#include "hkcount/schubert.hpp"

struct hk_table {
  hk::report::Table t;
};

namespace {

thread_local std::string last_error;

hk_status status_of(hk::ErrorCode code) {
  using hk::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return HK_ERR_INVALID_ARGUMENT;
    case ErrorCode::OrderExceeded: return HK_ERR_ORDER_EXCEEDED;
    case ErrorCode::NonUnitLeadingCoefficient: return HK_ERR_NON_UNIT;
    case ErrorCode::UnsupportedWeight: return HK_ERR_UNSUPPORTED_WEIGHT;
    case ErrorCode::BracketValuationMismatch: return HK_ERR_BRACKET_VALUATION;
    case ErrorCode::RepresentativeOutOfRange: return HK_ERR_REPRESENTATIVE_RANGE;
    case ErrorCode::JacobiIndexViolation: return HK_ERR_JACOBI_INDEX;
    case ErrorCode::NonIntegralCount: return HK_ERR_NON_INTEGRAL;
    case ErrorCode::RankMismatch: return HK_ERR_RANK_MISMATCH;
    case ErrorCode::SpaceMismatch: return HK_ERR_SPACE_MISMATCH;
    case ErrorCode::OddAdjunctionIntegral: return HK_ERR_ODD_ADJUNCTION;
    case ErrorCode::InvariantViolation: return HK_ERR_INVARIANT;
  }
  return HK_ERR_INTERNAL;
}

template <class F>
hk_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const hk::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HK_ERR_INTERNAL;
  }
}

template <class F>
hk_status make_table(hk_table** out, F&& build) {
  if (out == nullptr) {
    last_error = "output pointer is NULL";
    return HK_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new hk_table{build()};
    if ((*out)->t.failed) {
      last_error = "one or more checks failed";
      return HK_ERR_INVARIANT;
    }
    return HK_OK;
  });
}

}  // namespace

extern "C" {

const char* hk_version(void) { return "1.0.0"; }

const char* hk_last_error(void) { return last_error.c_str(); }

const char* hk_status_name(hk_status status) {
  switch (status) {
    case HK_OK: return "ok";
    case HK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HK_ERR_ORDER_EXCEEDED: return "order exceeded";
    case HK_ERR_NON_UNIT: return "non-unit leading coefficient";
    case HK_ERR_UNSUPPORTED_WEIGHT: return "unsupported weight";
    case HK_ERR_BRACKET_VALUATION: return "bracket valuation mismatch";
    case HK_ERR_REPRESENTATIVE_RANGE: return "representative out of range";
    case HK_ERR_JACOBI_INDEX: return "jacobi index violation";
    case HK_ERR_NON_INTEGRAL: return "non-integral count";
    case HK_ERR_RANK_MISMATCH: return "rank mismatch";
    case HK_ERR_SPACE_MISMATCH: return "space mismatch";
    case HK_ERR_ODD_ADJUNCTION: return "odd adjunction integral";
    case HK_ERR_INVARIANT: return "invariant violation";
    case HK_ERR_IO: return "i/o error";
    case HK_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

hk_status hk_k3(int hmax, hk_table** out) {
  return make_table(out, [&] { return hk::report::k3_table(hmax); });
}

hk_status hk_k3two(int smax, hk_method method, hk_table** out) {
  return make_table(out, [&] {
    if (method < HK_METHOD_JACOBI || method > HK_METHOD_BOTH) {
      throw hk::Error(hk::ErrorCode::InvalidArgument, "unknown method");
    }
    return hk::report::k3two_table(smax, static_cast<hk::report::Method>(method));
  });
}

hk_status hk_series(const char* name, int order, hk_table** out) {
  return make_table(out, [&] {
    if (name == nullptr) throw hk::Error(hk::ErrorCode::InvalidArgument, "series name is NULL");
    return hk::report::series_table(name, order);
  });
}

hk_status hk_jacobi(int qorder, hk_table** out) {
  return make_table(out, [&] { return hk::report::jacobi_table(qorder); });
}

hk_status hk_fano(hk_fano_quantity which, int via_euler, hk_table** out) {
  return make_table(out, [&] {
    if (which != HK_FANO_GENUS && which != HK_FANO_DEGREE) {
      throw hk::Error(hk::ErrorCode::InvalidArgument, "unknown Fano quantity");
    }
    return hk::report::fano_table(static_cast<hk::report::FanoQuantity>(which), via_euler != 0);
  });
}

hk_status hk_selftest(hk_selftest_level level, hk_table** out) {
  return make_table(out, [&] {
    if (level != HK_SELFTEST_QUICK && level != HK_SELFTEST_FULL) {
      throw hk::Error(hk::ErrorCode::InvalidArgument, "unknown selftest level");
    }
    return hk::report::selftest_table(static_cast<hk::report::SelftestLevel>(level));
  });
}

size_t hk_table_columns(const hk_table* t) { return t ? t->t.columns.size() : 0; }

size_t hk_table_rows(const hk_table* t) { return t ? t->t.rows.size() : 0; }

const char* hk_table_column_name(const hk_table* t, size_t col) {
  if (t == nullptr || col >= t->t.columns.size()) return nullptr;
  return t->t.columns[col].c_str();
}

const char* hk_table_cell(const hk_table* t, size_t row, size_t col) {
  if (t == nullptr || row >= t->t.rows.size() || col >= t->t.rows[row].size()) return nullptr;
  return t->t.rows[row][col].c_str();
}

void hk_table_free(hk_table* t) { delete t; }

hk_status hk_lr_cache_load(const char* path, int* loaded) {
  return guarded([&] {
    if (path == nullptr) throw hk::Error(hk::ErrorCode::InvalidArgument, "path is NULL");
    const bool ok = hk::chow::lr_cache_load(path);
    if (loaded) *loaded = ok ? 1 : 0;
    return HK_OK;
  });
}

hk_status hk_lr_cache_save(const char* path) {
  return guarded([&] {
    if (path == nullptr) throw hk::Error(hk::ErrorCode::InvalidArgument, "path is NULL");
    try {
      hk::chow::lr_cache_save(path);
    } catch (const hk::Error& e) {
      last_error = e.what();
      return HK_ERR_IO;
    }
    return HK_OK;
  });
}

}  // extern "C"
