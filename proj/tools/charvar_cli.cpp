// command-line front end: characteristic varieties, cover Betti numbers,
// braid-monodromy presentations, and monomial torus sets
#include "charvar/braid.hpp"
#include "charvar/jsonio.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace charvar;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Int budget_arg(long flag) { return flag > 0 ? Int(flag) : Int(-1); }

int run(int argc, char** argv) {
  CLI::App app{"exact characteristic varieties of plane-curve complements"};
  app.require_subcommand(1);

  std::string pres_path, field_name = "F3", cover_arg, set_path, map_path, enum_field;
  std::string component;
  long k = 1, torsion = 0, budget = 0, max_index = 64;
  bool branched = false, tsv = false, all_components = false, shortlex = false;
  bool emit_pres = false, mirror = false;

  auto* alex = app.add_subcommand("alexander", "print the Alexander matrix of a presentation");
  alex->add_option("presentation", pres_path, "presentation file")->required();
  alex->add_option("--delete", component, "delete one curve component first");

  auto* cv = app.add_subcommand("charvar", "enumerate a characteristic-variety slice");
  cv->add_option("presentation", pres_path)->required();
  cv->add_option("--field", field_name, "coefficient field (F3, F4, Q(z2), ...)");
  cv->add_option("--torsion", torsion, "scan N-torsion characters over Q(zN) instead");
  cv->add_option("--k", k, "depth threshold (default 1)");
  cv->add_option("--budget", budget, "enumeration budget override");
  cv->add_flag("--tsv", tsv, "points as TSV instead of JSON");

  auto* cl = app.add_subcommand("classify", "classify slice points as coordinate/essential");
  cl->add_option("presentation", pres_path)->required();
  cl->add_option("--field", field_name);
  cl->add_option("--k", k);
  cl->add_option("--budget", budget);
  cl->add_flag("--all-components", all_components,
               "also report essential coordinate characters per component");

  auto* sk = app.add_subcommand("sakuma", "first Betti number of a finite abelian cover");
  sk->add_option("presentation", pres_path)->required();
  sk->add_option("--cover", cover_arg, "cover spec file or '<component>:Z/<n>'")->required();
  sk->add_flag("--branched", branched, "branched cover formula");
  sk->add_option("--max-index", max_index, "Reidemeister-Schreier index bound");

  auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier subgroup presentation");
  rs->add_option("presentation", pres_path)->required();
  rs->add_option("--cover", cover_arg)->required();
  rs->add_flag("--shortlex", shortlex, "ShortLex transversal instead of BFS");
  rs->add_option("--max-index", max_index);

  auto* zv = app.add_subcommand("zvk", "presentation from a braid-monodromy file");
  zv->add_option("monodromy", pres_path, "monodromy file")->required();
  zv->add_flag("--emit-pres", emit_pres, "print the presentation DSL instead of JSON");
  zv->add_flag("--mirror", mirror, "mirrored Artin action convention");

  auto* to = app.add_subcommand("torus", "monomial torus sets: pieces, images, enumeration");
  to->add_option("--set", set_path, "set file")->required();
  to->add_option("--map", map_path, "exponent-lattice automorphism file");
  to->add_option("--enumerate", enum_field, "enumerate points over this finite field");
  to->add_option("--budget", budget);
  to->add_flag("--tsv", tsv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (alex->parsed()) {
    GroupPresentation p = load_presentation(pres_path);
    AlexMatrix A = alexander_matrix(p);
    if (!component.empty()) A = deletion_matrix(A, component);
    emit(alexander_json(A));
  } else if (cv->parsed()) {
    GroupPresentation p = load_presentation(pres_path);
    AlexMatrix A = alexander_matrix(p);
    CharSlice s = torsion > 0 ? torsion_scan(A, (int)torsion, (int)k, budget_arg(budget))
                              : enumerate_char(A, parse_field(field_name), (int)k, budget_arg(budget));
    if (tsv)
      std::cout << tsv_points(s.F, s.points);
    else
      emit(charvar_json(s));
  } else if (cl->parsed()) {
    GroupPresentation p = load_presentation(pres_path);
    AlexMatrix A = alexander_matrix(p);
    Field F = parse_field(field_name);
    CharSlice s = enumerate_char(A, F, (int)k, budget_arg(budget));
    Json j = charvar_json(s);
    j["classification"] = classification_json(A, F, classify(A, F, s.points, (int)k));
    if (all_components) {
      Json ess = Json::object();
      for (int c = 0; c < (int)p.ncomponents(); ++c) {
        EssentialReport r = has_essential_coordinate(A, c, F, (int)k, budget_arg(budget));
        Json e;
        e["present"] = r.present;
        Json w = Json::array();
        for (auto& pt : r.witnesses) w.push_back(point_json(F, pt));
        e["witnesses"] = w;
        ess[p.components[c]] = e;
      }
      j["essential_coordinate"] = ess;
    }
    emit(j);
  } else if (sk->parsed()) {
    GroupPresentation p = load_presentation(pres_path);
    BoundCover b = bind_cover(parse_cover_arg(cover_arg), p);
    if (branched) {
      SakumaResult r = b1_branched(p, b);
      Json j;
      j["b1_formula"] = checked_long(r.b1);
      j["per_character_depths"] = per_character_json(r);
      emit(j);
    } else {
      SakumaResult r = b1_unbranched(p, b);
      SubgroupPresentation sub = rs_subgroup(p, b, TransversalKind::Bfs, Int(max_index));
      emit(sakuma_json(r, sub));
    }
  } else if (rs->parsed()) {
    GroupPresentation p = load_presentation(pres_path);
    BoundCover b = bind_cover(parse_cover_arg(cover_arg), p);
    SubgroupPresentation sub =
        rs_subgroup(p, b, shortlex ? TransversalKind::ShortLex : TransversalKind::Bfs, Int(max_index));
    emit(rs_json(p, sub));
  } else if (zv->parsed()) {
    MonodromyData m = load_monodromy(pres_path);
    if (mirror) m.convention = BraidConvention::Mirror;
    GroupPresentation p = zvk_presentation(m);
    if (emit_pres) {
      std::cout << "gens:";
      for (auto& g : p.gens) std::cout << " " << g.name << "@" << p.components[g.label];
      std::cout << "\n";
      for (auto& r : p.rels) std::cout << "rel: " << word_to_string(r, p.gen_names()) << "\n";
    } else {
      emit(presentation_json(p));
    }
  } else if (to->parsed()) {
    TorsionSubtorusSet S = load_torus_set(set_path);
    if (!map_path.empty()) S = image(S, load_lattice_auto(map_path));
    Json j;
    j["coordinates"] = S.coord_names;
    j["pieces"] = torus_pieces_json(S);
    if (!enum_field.empty()) {
      Field F = parse_field(enum_field);
      auto pts = enumerate_set(S, F, budget_arg(budget));
      if (tsv) {
        std::cout << tsv_points(F, pts);
        return 0;
      }
      j["enumeration"] = torus_enumeration_json(S, F, pts);
    }
    emit(j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const budget_error& e) {
    std::cerr << "error: budget: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
