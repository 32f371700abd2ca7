// Command-line front end. Talks to the library only through empty4.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "empty4.h"

namespace {

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using TuplePtr = std::unique_ptr<e4_tuple, Deleter<e4_tuple, e4_tuple_free>>;
using SimplexPtr = std::unique_ptr<e4_simplex, Deleter<e4_simplex, e4_simplex_free>>;
using CensusPtr = std::unique_ptr<e4_census, Deleter<e4_census, e4_census_free>>;

// Library failure: message already recorded by the C API.
struct DomainError {
  std::string message;
};

// Malformed invocation detected after CLI11 parsing succeeded.
struct UsageError {
  std::string message;
};

void check(e4_status s) {
  if (s != E4_OK) throw DomainError{e4_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  e4_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError{"IoError: cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TuplePtr parse_tuple(const std::string& text) {
  e4_tuple* t = nullptr;
  check(e4_tuple_parse(text.c_str(), &t));
  return TuplePtr(t);
}

SimplexPtr parse_simplex_file(const std::string& path) {
  e4_simplex* s = nullptr;
  check(e4_simplex_parse(read_file(path).c_str(), &s));
  return SimplexPtr(s);
}

TuplePtr tuple_of(const e4_simplex* s) {
  e4_tuple* t = nullptr;
  check(e4_simplex_tuple(s, &t));
  return TuplePtr(t);
}

TuplePtr canonical(const e4_tuple* t) {
  e4_tuple* c = nullptr;
  check(e4_tuple_canonical(t, &c));
  return TuplePtr(c);
}

std::string format(const e4_tuple* t) {
  char* s = nullptr;
  check(e4_tuple_format(t, &s));
  return take(s);
}

CensusPtr read_census(const std::string& path, bool normalize) {
  e4_census* c = nullptr;
  check(e4_census_read(path.c_str(), normalize ? 1 : 0, &c));
  return CensusPtr(c);
}

// A simplex given either as a tuple argument or as a coordinate file.
struct Input {
  std::string tuple;
  std::string coords;

  void attach(CLI::App* cmd) {
    cmd->add_option("tuple", tuple, "V:b0,b1,b2,b3,b4");
    cmd->add_option("--coords", coords, "file with one vertex per line")->check(CLI::ExistingFile);
  }

  TuplePtr load() const {
    if (tuple.empty() == coords.empty()) throw UsageError{"give exactly one of a tuple or --coords FILE"};
    if (!coords.empty()) {
      auto s = parse_simplex_file(coords);
      return tuple_of(s.get());
    }
    return parse_tuple(tuple);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empty lattice 4-simplices: oracles, classification and census tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", e4_version());

  std::function<void()> action;

  Input classify_in;
  auto* classify = app.add_subcommand("classify", "sporadic, family members, or not empty/hollow");
  classify_in.attach(classify);
  classify->callback([&] {
    action = [&] {
      auto c = canonical(classify_in.load().get());
      char* s = nullptr;
      check(e4_classify(c.get(), &s));
      std::cout << take(s);
    };
  });

  Input empty_in;
  auto* empty_check = app.add_subcommand("empty-check", "prints empty or not-empty");
  empty_in.attach(empty_check);
  empty_check->callback([&] {
    action = [&] {
      int r = 0;
      check(e4_is_empty(empty_in.load().get(), &r));
      std::cout << (r ? "empty" : "not-empty") << '\n';
    };
  });

  Input hollow_in;
  auto* hollow_check = app.add_subcommand("hollow-check", "prints hollow or not-hollow");
  hollow_in.attach(hollow_check);
  hollow_check->callback([&] {
    action = [&] {
      int r = 0;
      check(e4_is_hollow(hollow_in.load().get(), &r));
      std::cout << (r ? "hollow" : "not-hollow") << '\n';
    };
  });

  std::string realize_tuple;
  auto* realize = app.add_subcommand("realize", "vertex coordinates of a tuple");
  realize->add_option("tuple", realize_tuple, "V:b0,b1,b2,b3,b4")->required();
  realize->callback([&] {
    action = [&] {
      auto t = parse_tuple(realize_tuple);
      e4_simplex* s = nullptr;
      check(e4_realize(t.get(), &s));
      SimplexPtr owned(s);
      char* text = nullptr;
      check(e4_simplex_format(s, &text));
      std::cout << take(text);
    };
  });

  std::string tuple_of_file;
  auto* tuple_of_cmd = app.add_subcommand("tuple-of", "canonical tuple of a simplex given by coordinates");
  tuple_of_cmd->add_option("file", tuple_of_file, "coordinate file")->check(CLI::ExistingFile);
  tuple_of_cmd->add_option("--coords", tuple_of_file, "coordinate file")->check(CLI::ExistingFile);
  tuple_of_cmd->callback([&] {
    action = [&] {
      if (tuple_of_file.empty()) throw UsageError{"tuple-of needs a coordinate file"};
      auto s = parse_simplex_file(tuple_of_file);
      std::cout << format(canonical(tuple_of(s.get()).get()).get()) << '\n';
    };
  });

  Input width_in;
  auto* width = app.add_subcommand("width", "lattice width");
  width_in.attach(width);
  width->callback([&] {
    action = [&] {
      std::int64_t w = 0;
      if (!width_in.coords.empty() && width_in.tuple.empty()) {
        auto s = parse_simplex_file(width_in.coords);
        check(e4_simplex_width(s.get(), &w));
      } else {
        check(e4_tuple_width(width_in.load().get(), &w));
      }
      std::cout << w << '\n';
    };
  });

  Input hstar_in;
  auto* hstar = app.add_subcommand("hstar", "h*-vector of an empty 4-simplex");
  hstar_in.attach(hstar);
  hstar->callback([&] {
    action = [&] {
      std::int64_t h[5];
      check(e4_hstar(hstar_in.load().get(), h));
      std::cout << h[0] << ' ' << h[1] << ' ' << h[2] << ' ' << h[3] << ' ' << h[4] << '\n';
    };
  });

  auto* families = app.add_subcommand("families", "infinite family tables");
  families->require_subcommand(1);
  auto* families_list = families->add_subcommand("list", "print the family tables");
  families_list->callback([&] {
    action = [&] {
      char* s = nullptr;
      check(e4_families_table(&s));
      std::cout << take(s);
    };
  });

  std::int64_t from = 1, to = 0;
  bool sporadic = false;
  std::string out_path, checkpoint;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* enumerate = app.add_subcommand("enumerate", "census of empty 4-simplices by volume");
  enumerate->add_option("--from", from, "smallest volume")->capture_default_str();
  enumerate->add_option("--to", to, "largest volume")->required();
  enumerate->add_flag("--sporadic", sporadic, "drop members of the infinite families");
  enumerate->add_option("--out", out_path, "census file (default: standard output)");
  enumerate->add_option("--workers", workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  auto* ckpt = enumerate->add_option("--checkpoint", checkpoint, "resume state file");
  ckpt->needs(enumerate->get_option("--out"));
  enumerate->callback([&] {
    action = [&] {
      e4_search_config cfg{from, to, workers, sporadic ? 1 : 0, checkpoint.empty() ? nullptr : checkpoint.c_str()};
      if (!out_path.empty()) {
        check(e4_enumerate_to_file(&cfg, out_path.c_str()));
        return;
      }
      e4_census* c = nullptr;
      check(e4_enumerate(&cfg, &c));
      CensusPtr owned(c);
      char* s = nullptr;
      check(e4_census_format(c, &s));
      std::cout << take(s);
    };
  });

  std::int64_t sing_volume = 0;
  auto* singularities = app.add_subcommand("singularities", "vertex-orbit count over the sporadics of a volume");
  singularities->add_option("volume", sing_volume, "V")->required();
  singularities->callback([&] {
    action = [&] {
      std::int64_t n = 0;
      check(e4_singularity_count(sing_volume, &n));
      std::cout << n << '\n';
    };
  });

  // Census reports share their flags.
  struct Report {
    std::string file;
    bool machine = false;
    bool normalize = false;
  };
  auto report_cmd = [&](const char* name, const char* help, Report& r,
                        e4_status (*fn)(const e4_census*, int, char**)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", r.file, "census file")->required()->check(CLI::ExistingFile);
    cmd->add_flag("--machine", r.machine, "bare space-separated records");
    cmd->add_flag("--normalize", r.normalize, "accept non-canonical rows");
    cmd->callback([&r, fn, &action] {
      action = [&r, fn] {
        auto c = read_census(r.file, r.normalize);
        char* s = nullptr;
        check(fn(c.get(), r.machine ? 1 : 0, &s));
        std::cout << take(s);
      };
    });
  };
  Report stats_r, widths_r, excess_r;
  report_cmd("stats", "count per volume", stats_r, e4_census_histogram);
  report_cmd("widths", "count and volume range per lattice width", widths_r, e4_census_widths);
  report_cmd("excess", "volume and surface excess per row", excess_r, e4_census_excess);

  std::string diff_a, diff_b;
  bool diff_machine = false, diff_normalize = false;
  auto* diff = app.add_subcommand("diff", "rows present in only one of two censuses");
  diff->add_option("first", diff_a, "census file")->required()->check(CLI::ExistingFile);
  diff->add_option("second", diff_b, "census file")->required()->check(CLI::ExistingFile);
  diff->add_flag("--machine", diff_machine, "prefix rows with < or >");
  diff->add_flag("--normalize", diff_normalize, "accept non-canonical rows");
  diff->callback([&] {
    action = [&] {
      auto a = read_census(diff_a, diff_normalize);
      auto b = read_census(diff_b, diff_normalize);
      char* s = nullptr;
      check(e4_census_diff(a.get(), b.get(), diff_machine ? 1 : 0, &s, nullptr, nullptr));
      std::cout << take(s);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (action) action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.message << '\n';
    return 1;
  }
  return std::cout.good() ? 0 : 1;
}
