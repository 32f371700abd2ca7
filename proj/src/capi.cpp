#include "empty4.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "empty4/census.hpp"
#include "empty4/enumerator.hpp"
#include "empty4/error.hpp"
#include "empty4/families.hpp"
#include "empty4/geometry.hpp"
#include "empty4/lattice.hpp"
#include "empty4/tuple.hpp"

struct e4_tuple {
  empty4::Tuple t;
};
struct e4_simplex {
  empty4::SimplexCoords s;
};
struct e4_census {
  empty4::Census c;
};

namespace {

thread_local std::string g_last_error;

e4_status fail(e4_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <class F>
e4_status guard(F&& f) {
  try {
    f();
    return E4_OK;
  } catch (const empty4::Error& e) {
    return fail(static_cast<e4_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(E4_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(E4_INTERNAL, e.what());
  } catch (...) {
    return fail(E4_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* what) {
  if (!p) empty4::raise(empty4::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class T>
void copy_out(const T& src, int64_t* out, size_t capacity) {
  if (src.size() > capacity)
    empty4::raise(empty4::ErrorCode::InvalidArgument,
                  "output buffer holds " + std::to_string(capacity) + ", need " + std::to_string(src.size()));
  for (size_t i = 0; i < src.size(); ++i) out[i] = src[i];
}

e4_tuple* wrap(empty4::Tuple t) { return new e4_tuple{std::move(t)}; }

empty4::SearchConfig convert(const e4_search_config* cfg) {
  need(cfg, "config");
  empty4::SearchConfig c;
  c.v_min = cfg->v_min;
  c.v_max = cfg->v_max;
  c.workers = cfg->workers > 0 ? cfg->workers : 1;
  c.prune_families = cfg->sporadic_only != 0;
  if (cfg->checkpoint) c.checkpoint_path = cfg->checkpoint;
  return c;
}

}  // namespace

extern "C" {

const char* e4_version(void) { return "1.0.0"; }

const char* e4_status_name(e4_status status) {
  switch (status) {
    case E4_OK: return "Ok";
    case E4_OUT_OF_MEMORY: return "OutOfMemory";
    case E4_INTERNAL: return "Internal";
    default:
      if (status >= E4_INVALID_ARGUMENT && status <= E4_IO)
        return empty4::error_code_name(static_cast<empty4::ErrorCode>(status));
      return "Unknown";
  }
}

const char* e4_last_error(void) { return g_last_error.c_str(); }

void e4_string_free(char* s) { std::free(s); }

e4_status e4_tuple_parse(const char* text, e4_tuple** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(empty4::parse_tuple(text));
  });
}

e4_status e4_tuple_create(int64_t volume, const int64_t* entries, size_t count, e4_tuple** out) {
  return guard([&] {
    need(entries, "entries");
    need(out, "out");
    *out = wrap(empty4::Tuple::make(volume, std::span<const empty4::i64>(entries, count)));
  });
}

e4_status e4_tuple_clone(const e4_tuple* t, e4_tuple** out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = wrap(t->t);
  });
}

void e4_tuple_free(e4_tuple* t) { delete t; }

int64_t e4_tuple_volume(const e4_tuple* t) { return t ? t->t.volume() : 0; }

size_t e4_tuple_size(const e4_tuple* t) { return t ? t->t.size() : 0; }

e4_status e4_tuple_residues(const e4_tuple* t, int64_t* out, size_t capacity) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    copy_out(t->t.residues(), out, capacity);
  });
}

e4_status e4_tuple_format(const e4_tuple* t, char** out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = dup(empty4::to_string(t->t));
  });
}

e4_status e4_tuple_canonical(const e4_tuple* t, e4_tuple** out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = wrap(empty4::canonical_form(t->t).tuple());
  });
}

e4_status e4_tuple_unit_multiply(const e4_tuple* t, int64_t unit, e4_tuple** out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = wrap(empty4::unit_multiply(t->t, unit));
  });
}

e4_status e4_tuple_isomorphic(const e4_tuple* a, const e4_tuple* b, int* out) {
  return guard([&] {
    need(a, "first tuple");
    need(b, "second tuple");
    need(out, "out");
    *out = empty4::is_isomorphic(a->t, b->t) ? 1 : 0;
  });
}

e4_status e4_tuple_orbit_count(const e4_tuple* t, int* out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = empty4::symmetry_group(t->t).orbit_count;
  });
}

#define E4_PREDICATE(name, fn)                  \
  e4_status name(const e4_tuple* t, int* out) { \
    return guard([&] {                          \
      need(t, "tuple");                         \
      need(out, "out");                         \
      *out = empty4::fn(t->t) ? 1 : 0;          \
    });                                         \
  }

E4_PREDICATE(e4_is_empty, is_empty)
E4_PREDICATE(e4_is_hollow, is_hollow)
E4_PREDICATE(e4_coprime_condition, coprime_condition)
E4_PREDICATE(e4_empty_via_facets, empty_via_facets)

#undef E4_PREDICATE

e4_status e4_count_lattice_points(const e4_tuple* t, int64_t dilation, uint64_t* out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = empty4::count_lattice_points_by_coset(t->t, dilation);
  });
}

e4_status e4_facet_volumes(const e4_tuple* t, int64_t* out, size_t capacity) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    copy_out(empty4::facet_volumes(t->t), out, capacity);
  });
}

e4_status e4_hstar(const e4_tuple* t, int64_t out[5]) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    copy_out(empty4::hstar(t->t).h, out, 5);
  });
}

e4_status e4_simplex_parse(const char* text, e4_simplex** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new e4_simplex{empty4::parse_simplex(text)};
  });
}

e4_status e4_simplex_create(int dim, const int64_t* coords, e4_simplex** out) {
  return guard([&] {
    need(coords, "coords");
    need(out, "out");
    if (dim < 1 || dim > empty4::kMaxDim)
      empty4::raise(empty4::ErrorCode::InvalidArgument, "dimension out of range: " + std::to_string(dim));
    std::vector<std::vector<empty4::i64>> v(dim + 1, std::vector<empty4::i64>(dim));
    for (int i = 0; i <= dim; ++i)
      for (int j = 0; j < dim; ++j) v[i][j] = coords[i * dim + j];
    *out = new e4_simplex{empty4::SimplexCoords::make(std::move(v))};
  });
}

void e4_simplex_free(e4_simplex* s) { delete s; }

int e4_simplex_dim(const e4_simplex* s) { return s ? s->s.dim() : 0; }

e4_status e4_simplex_coords(const e4_simplex* s, int64_t* out, size_t capacity) {
  return guard([&] {
    need(s, "simplex");
    need(out, "out");
    std::vector<empty4::i64> flat;
    for (const auto& v : s->s.vertices()) flat.insert(flat.end(), v.begin(), v.end());
    copy_out(flat, out, capacity);
  });
}

e4_status e4_simplex_format(const e4_simplex* s, char** out) {
  return guard([&] {
    need(s, "simplex");
    need(out, "out");
    *out = dup(empty4::to_string(s->s));
  });
}

e4_status e4_realize(const e4_tuple* t, e4_simplex** out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = new e4_simplex{empty4::realize(t->t)};
  });
}

e4_status e4_simplex_tuple(const e4_simplex* s, e4_tuple** out) {
  return guard([&] {
    need(s, "simplex");
    need(out, "out");
    *out = wrap(empty4::tuple_from_simplex(s->s));
  });
}

e4_status e4_simplex_volume(const e4_simplex* s, int64_t* out) {
  return guard([&] {
    need(s, "simplex");
    need(out, "out");
    *out = empty4::volume(s->s);
  });
}

e4_status e4_simplex_width(const e4_simplex* s, int64_t* out) {
  return guard([&] {
    need(s, "simplex");
    need(out, "out");
    *out = empty4::width(s->s);
  });
}

e4_status e4_tuple_width(const e4_tuple* t, int64_t* out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = empty4::tuple_width(t->t);
  });
}

e4_status e4_classify(const e4_tuple* t, char** out) {
  return guard([&] {
    need(t, "tuple");
    need(out, "out");
    *out = dup(empty4::format_classification(empty4::classify(t->t)));
  });
}

e4_status e4_families_table(char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(empty4::format_family_tables());
  });
}

e4_status e4_enumerate(const e4_search_config* cfg, e4_census** out) {
  return guard([&] {
    need(out, "out");
    *out = new e4_census{empty4::enumerate_census(convert(cfg))};
  });
}

e4_status e4_enumerate_to_file(const e4_search_config* cfg, const char* path) {
  return guard([&] {
    need(path, "path");
    empty4::enumerate_to_file(convert(cfg), path);
  });
}

e4_status e4_singularity_count(int64_t volume, int64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = empty4::singularity_count(volume);
  });
}

e4_status e4_census_read(const char* path, int normalize, e4_census** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    auto mode = normalize ? empty4::ReadMode::Normalize : empty4::ReadMode::Strict;
    *out = new e4_census{empty4::read_census_file(path, mode)};
  });
}

e4_status e4_census_read_string(const char* text, int normalize, e4_census** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::istringstream in(text);
    auto mode = normalize ? empty4::ReadMode::Normalize : empty4::ReadMode::Strict;
    *out = new e4_census{empty4::read_census(in, mode)};
  });
}

e4_status e4_census_write(const e4_census* c, const char* path) {
  return guard([&] {
    need(c, "census");
    need(path, "path");
    empty4::write_census_file(c->c, path);
  });
}

e4_status e4_census_format(const e4_census* c, char** out) {
  return guard([&] {
    need(c, "census");
    need(out, "out");
    *out = dup(empty4::format_census(c->c));
  });
}

void e4_census_free(e4_census* c) { delete c; }

size_t e4_census_size(const e4_census* c) { return c ? c->c.rows.size() : 0; }

e4_status e4_census_row(const e4_census* c, size_t index, e4_tuple** out) {
  return guard([&] {
    need(c, "census");
    need(out, "out");
    if (index >= c->c.rows.size())
      empty4::raise(empty4::ErrorCode::InvalidArgument, "row index out of range: " + std::to_string(index));
    *out = wrap(c->c.rows[index].tuple());
  });
}

e4_status e4_census_histogram(const e4_census* c, int machine, char** out) {
  return guard([&] {
    need(c, "census");
    need(out, "out");
    *out = dup(empty4::format_histogram(empty4::histogram_by_volume(c->c), machine != 0));
  });
}

e4_status e4_census_widths(const e4_census* c, int machine, char** out) {
  return guard([&] {
    need(c, "census");
    need(out, "out");
    *out = dup(empty4::format_width_histogram(empty4::width_histogram(c->c), machine != 0));
  });
}

e4_status e4_census_excess(const e4_census* c, int machine, char** out) {
  return guard([&] {
    need(c, "census");
    need(out, "out");
    *out = dup(empty4::format_excess(empty4::excess_report(c->c), machine != 0));
  });
}

e4_status e4_census_diff(const e4_census* a, const e4_census* b, int machine, char** out, size_t* only_a,
                         size_t* only_b) {
  return guard([&] {
    need(a, "first census");
    need(b, "second census");
    need(out, "out");
    auto d = empty4::diff_census(a->c, b->c);
    *out = dup(empty4::format_diff(d, machine != 0));
    if (only_a) *only_a = d.only_in_a.size();
    if (only_b) *only_b = d.only_in_b.size();
  });
}

}  // extern "C"
