#include "topohopf/goldens.hpp"

#include "topohopf/ops.hpp"

namespace topohopf {

namespace {

std::vector<Golden> build() {
  using S = Suite;
  return {
      // Words: packing, restriction, standardisation, j, M(f).
      {S::Order, "restrict 511423 to {1,2,3}", "restrict_word", {"(511423)", "{1,2,3}"}, "(1,1,2,3)"},
      {S::Order, "Std(11)", "std_word", {"(11)"}, "(12)"},
      {S::Order, "Std(122)", "std_word", {"(122)"}, "(123)"},
      {S::Order, "Std(212)", "std_word", {"(212)"}, "(213)"},
      {S::Order, "Std(221)", "std_word", {"(221)"}, "(231)"},
      {S::Order, "Std(112)", "std_word", {"(112)"}, "(123)"},
      {S::Order, "Std(121)", "std_word", {"(121)"}, "(132)"},
      {S::Order, "Std(211)", "std_word", {"(211)"}, "(312)"},
      {S::Order, "Std(111)", "std_word", {"(111)"}, "(123)"},
      {S::Order, "j(65133421)", "j_involution", {"(65133421)"}, "(12644356)"},
      {S::Order, "M(412133)", "ascent_set", {"(412133)"}, "{3}"},
      {S::Order, "(111) <= (123)", "word_leq", {"(111)", "(123)"}, "true"},
      {S::Order, "(121) <= (132)", "word_leq", {"(121)", "(132)"}, "true"},
      {S::Order, "phi100(123)", "phi", {"100", "(123)"}, "(123) + (122) + (112) + (111)"},
      {S::Order, "phi100(132)", "phi", {"100", "(132)"}, "(132) + (121)"},
      {S::Order, "phi100(213)", "phi", {"100", "(213)"}, "(213) + (212)"},
      {S::Order, "phi100(231)", "phi", {"100", "(231)"}, "(231) + (221)"},
      {S::Order, "phi100(312)", "phi", {"100", "(312)"}, "(312) + (211)"},
      {S::Order, "phi100(321)", "phi", {"100", "(321)"}, "(321)"},
      {S::Order, "phi100(112)", "phi", {"100", "(112)"}, "(112) + (111)"},
      {S::Order, "phi100(121)", "phi", {"100", "(121)"}, "(121)"},
      {S::Order, "phi100(211)", "phi", {"100", "(211)"}, "(211)"},
      {S::Order, "phi100(122)", "phi", {"100", "(122)"}, "(122) + (111)"},
      {S::Order, "phi100(212)", "phi", {"100", "(212)"}, "(212)"},
      {S::Order, "phi100(221)", "phi", {"100", "(221)"}, "(221)"},
      {S::Order, "phi100(111)", "phi", {"100", "(111)"}, "(111)"},
      {S::Order, "component of (12)", "std_fiber", {"(12)"}, "{(12), (11)}"},
      {S::Order, "component of (21)", "std_fiber", {"(21)"}, "{(21)}"},

      // Topologies and the products of h_T.
      {S::Hopf, "T_(331231)", "topology_of_word", {"(331231)"}, "[6|{3,6}<4<{1,2,5}]"},
      {S::Hopf, "T_(111)", "topology_of_word", {"(111)"}, "[3|{1,2,3}]"},
      {S::Hopf, "bar {1,2} 3", "bar", {"[3|{1,2}]"}, "[2|]"},
      {S::Hopf, "bar {1,2}<3", "bar", {"[3|{1,2}<3]"}, "[2|1<2]"},
      {S::Hopf, "bar 3<{1,2}", "bar", {"[3|3<{1,2}]"}, "[2|2<1]"},
      {S::Hopf, "bar {1,2}", "bar", {"[2|{1,2}]"}, "[1|]"},
      {S::Hopf, "bar {1,3} 2", "bar", {"[3|{1,3}]"}, "[2|]"},
      {S::Hopf, "bar {1,3}<2", "bar", {"[3|{1,3}<2]"}, "[2|1<2]"},
      {S::Hopf, "bar 2<{1,3}", "bar", {"[3|2<{1,3}]"}, "[2|2<1]"},
      {S::Hopf, "bar {1,2,3}", "bar", {"[3|{1,2,3}]"}, "[1|]"},
      {S::Hopf, "bar {2,3} 1", "bar", {"[3|{2,3}]"}, "[2|]"},
      {S::Hopf, "bar {2,3}<1", "bar", {"[3|{2,3}<1]"}, "[2|2<1]"},
      {S::Hopf, "bar 1<{2,3}", "bar", {"[3|1<{2,3}]"}, "[2|1<2]"},
      {S::Hopf, "c of {1,2,3}", "c_defect", {"[3|{1,2,3}]"}, "2"},
      {S::Hopf, "c of {1,2} 3", "c_defect", {"[3|{1,2}]"}, "1"},
      {S::Hopf, "theta {1,2} 3", "theta_q", {"[3|{1,2}]"}, "q1*[2|]"},
      {S::Hopf, "theta {1,2}<3", "theta_q", {"[3|{1,2}<3]"}, "q1*[2|1<2]"},
      {S::Hopf, "theta 3<{1,2}", "theta_q", {"[3|3<{1,2}]"}, "q1*[2|2<1]"},
      {S::Hopf, "theta {1,2}", "theta_q", {"[2|{1,2}]"}, "q1*[1|]"},
      {S::Hopf, "theta {1,3} 2", "theta_q", {"[3|{1,3}]"}, "q1*[2|]"},
      {S::Hopf, "theta {1,3}<2", "theta_q", {"[3|{1,3}<2]"}, "q1*[2|1<2]"},
      {S::Hopf, "theta 2<{1,3}", "theta_q", {"[3|2<{1,3}]"}, "q1*[2|2<1]"},
      {S::Hopf, "theta {1,2,3}", "theta_q", {"[3|{1,2,3}]"}, "q1^2*[1|]"},
      {S::Hopf, "theta {2,3} 1", "theta_q", {"[3|{2,3}]"}, "q1*[2|]"},
      {S::Hopf, "theta {2,3}<1", "theta_q", {"[3|{2,3}<1]"}, "q1*[2|2<1]"},
      {S::Hopf, "theta 1<{2,3}", "theta_q", {"[3|1<{2,3}]"}, "q1*[2|1<2]"},
      {S::Hopf, "special poset product", "product_dot", {"[3|1<3]", "[3|1<2,1<3]"}, "[6|1<3,4<5,4<6]"},
      {S::Hopf, "dot product example", "product_dot", {"[3|1<2,1<3]", "[2|2<1]"}, "[5|1<2,1<3,5<4]"},
      {S::Hopf, "down product example", "product_down", {"[3|1<2,1<3]", "[2|2<1]"},
       "[5|1<2,1<3,2<5,3<5,5<4]"},

      // WQSym and FQSym.
      // Only packed words occur, so (11214) and (11224) are not terms.
      {S::Hopf, "(112).(12)", "wqsym_product", {"(112)", "(12)"},
       "(11212) + (11213) + (11223) + (11234) + (11312) + (11323) + (11324) + (11423) + "
       "(22312) + (22313) + (22314) + (22413) + (33412)"},
      {S::Hopf, "(1).(1)", "wqsym_product", {"(1)", "(1)"}, "(12) + (21) + (11)"},
      // Second term: restricting to the letter 1 gives (11).
      {S::Hopf, "coproduct of (511423)", "wqsym_coproduct", {"(511423)"},
       "1 ⊗ (511423) + (11) ⊗ (4312) + (112) ⊗ (321) + (1123) ⊗ (21) + (11423) ⊗ (1) + (511423) ⊗ 1"},
      {S::Hopf, "coproduct of (51423)", "wqsym_coproduct", {"(51423)"},
       "1 ⊗ (51423) + (1) ⊗ (4312) + (12) ⊗ (321) + (123) ⊗ (21) + (1423) ⊗ (1) + (51423) ⊗ 1"},
      {S::Hopf, "(132).(21) in FQSym", "fqsym_product", {"(132)", "(21)"},
       "(13254) + (14253) + (15243) + (14352) + (15342) + (15432) + (24351) + (25341) + (25431) + (35421)"},
      {S::Hopf, "(112) shifted shuffle (12)", "shuffle_product", {"(112)", "(12)"},
       "(11234) + (11324) + (11423) + (22314) + (22413) + (33412)"},

      // Ribbon basis, with i, j, k = 1, 2, 3.
      {S::Ribbon, "R {i,j}", "from_ribbon", {"R[2|{1,2}]"}, "[2|{1,2}]"},
      {S::Ribbon, "R i<j", "from_ribbon", {"R[2|1<2]"}, "[2|1<2] - [2|{1,2}]"},
      {S::Ribbon, "R i j", "from_ribbon", {"R[2|]"}, "[2|] - [2|1<2] - [2|2<1] + [2|{1,2}]"},
      {S::Ribbon, "R {i,j,k}", "from_ribbon", {"R[3|{1,2,3}]"}, "[3|{1,2,3}]"},
      {S::Ribbon, "R {i,j}<k", "from_ribbon", {"R[3|{1,2}<3]"}, "[3|{1,2}<3] - [3|{1,2,3}]"},
      {S::Ribbon, "R i<{j,k}", "from_ribbon", {"R[3|1<{2,3}]"}, "[3|1<{2,3}] - [3|{1,2,3}]"},
      {S::Ribbon, "R i {j,k}", "from_ribbon", {"R[3|{2,3}]"},
       "[3|{2,3}] - [3|1<{2,3}] - [3|{2,3}<1] + [3|{1,2,3}]"},
      {S::Ribbon, "R i<j<k", "from_ribbon", {"R[3|1<2<3]"},
       "[3|1<2<3] - [3|1<{2,3}] - [3|{1,2}<3] + [3|{1,2,3}]"},
      {S::Ribbon, "R i<j, i<k", "from_ribbon", {"R[3|1<3,1<2]"},
       "[3|1<3,1<2] - [3|1<2<3] - [3|1<3<2] + [3|1<{2,3}]"},
      {S::Ribbon, "R j<i, k<i", "from_ribbon", {"R[3|2<1,3<1]"},
       "[3|2<1,3<1] - [3|3<2<1] - [3|2<3<1] + [3|{2,3}<1]"},
      {S::Ribbon, "R i<j k", "from_ribbon", {"R[3|1<2]"},
       "[3|1<2] - [3|1<3,1<2] - [3|1<2,3<2] + [3|1<3<2] - [3|{1,2}] + [3|{1,2}<3] + [3|3<{1,2}] - [3|{1,2,3}]"},
      // The terms + {i,j} k carry the Moebius value 1 of a four-element interval.
      {S::Ribbon, "R i j k", "from_ribbon", {"R[3|]"},
       "[3|] - [3|1<2] - [3|1<3] - [3|2<1] - [3|2<3] - [3|3<1] - [3|3<2] - [3|1<{2,3}] - [3|2<{1,3}] - "
       "[3|3<{1,2}] - [3|{2,3}<1] - [3|{1,3}<2] - [3|{1,2}<3] + [3|1<3,1<2] + [3|2<3,2<1] + [3|3<2,3<1] + "
       "[3|2<1,3<1] + [3|1<2,3<2] + [3|1<3,2<3] + [3|{1,2}] + [3|{1,3}] + [3|{2,3}] + 2*[3|{1,2,3}]"},
      {S::Ribbon, "{1,2} refines 1<2", "refinement_leq", {"[2|{1,2}]", "[2|1<2]"}, "true"},
      {S::Ribbon, "1<2 and 2<1 incomparable", "refinement_leq", {"[2|1<2]", "[2|2<1]"}, "false"},

      // Pairing.
      {S::Pairing, "<1 2, 1 2>", "pictures_count", {"[2|]", "[2|]"}, "2"},
      {S::Pairing, "<1<2, 2<1>", "pictures_count", {"[2|1<2]", "[2|2<1]"}, "0"},
      {S::Pairing, "<{1,2}, {1,2}>", "pictures_count", {"[2|{1,2}]", "[2|{1,2}]"}, "2"},
      {S::Pairing, "rank of the degree-2 matrix", "exact_rank", {"[[2,1,1,0],[1,1,0,0],[1,0,1,0],[0,0,0,2]]"},
       "3"},
      {S::Pairing, "degenerate vector", "pairing", {"[2|] - [2|1<2] - [2|2<1]", "[2|]"}, "0"},

      // Gamma_q.
      {S::Gamma, "Gamma 1", "gamma_q", {"[1|]"}, "(1)"},
      {S::Gamma, "Gamma 1 2", "gamma_q", {"[2|]"}, "(12) + (21) + (11)"},
      {S::Gamma, "Gamma 1<2", "gamma_q", {"[2|1<2]"}, "(12) + q1*(11)"},
      {S::Gamma, "Gamma 2<1", "gamma_q", {"[2|2<1]"}, "(21) + q2*(11)"},
      {S::Gamma, "Gamma {1,2}", "gamma_q", {"[2|{1,2}]"}, "(11)"},
      {S::Gamma, "Gamma 1<3, 1<2", "gamma_q", {"[3|1<3,1<2]"},
       "(123) + (132) + (122) + q1*(112) + q1*(121) + q1^2*(111)"},
      {S::Gamma, "Gamma 2<3, 2<1", "gamma_q", {"[3|2<3,2<1]"},
       "(213) + (312) + (212) + q2*(112) + q1*(211) + q1*q2*(111)"},
      {S::Gamma, "Gamma 3<2, 3<1", "gamma_q", {"[3|3<2,3<1]"},
       "(231) + (321) + (221) + q2*(121) + q2*(211) + q2^2*(111)"},
      {S::Gamma, "Gamma {1,2}<3", "gamma_q", {"[3|{1,2}<3]"}, "(112) + q1^2*(111)"},
      {S::Gamma, "Gamma {1,3}<2", "gamma_q", {"[3|{1,3}<2]"}, "(121) + q1*q2*q3*(111)"},
      {S::Gamma, "Gamma {2,3}<1", "gamma_q", {"[3|{2,3}<1]"}, "(211) + q2^2*(111)"},
      {S::Gamma, "Gamma 1<{2,3}", "gamma_q", {"[3|1<{2,3}]"}, "(122) + q1^2*(111)"},
      {S::Gamma, "Gamma 2<{1,3}", "gamma_q", {"[3|2<{1,3}]"}, "(212) + q1*q2*q3*(111)"},
      {S::Gamma, "Gamma 3<{1,2}", "gamma_q", {"[3|3<{1,2}]"}, "(221) + q2^2*(111)"},
      {S::Gamma, "statistics of (12) for 1<2", "partition_stats", {"[2|1<2]", "(12)"}, "(0,0,0)"},
      {S::Gamma, "statistics of (11) for 1<2", "partition_stats", {"[2|1<2]", "(11)"}, "(1,0,0)"},
      {S::Gamma, "Gamma of a kernel element of L", "gamma_q", {"[3|1<2,1<3] - [3|1<2<3] - [3|1<3<2]"},
       "(1 - q1 - q2)*(122) + (1 - q1 - q2)*q1^2*(111)"},

      // Partitions, linear extensions, L.
      {S::Stanley, "generalized partitions of the five-point example", "generalized_partitions",
       {"[5|{2,4}<5,{2,4}<1]"},
       "{(11111), (11112), (11211), (11212), (11213), (11312), (21111), (21112), (21113), (21211), (21212), "
       "(21213), (21311), (21312), (21313), (21314), (21413), (22122), (22123), (31112), (31211), (31212), "
       "(31213), (31214), (31312), (31412), (32122), (32123), (32124), (41213), (41312), (42123)}"},
      {S::Stanley, "strict partitions of the five-point example", "strict_partitions", {"[5|{2,4}<5,{2,4}<1]"},
       "{(21211), (21212), (21213), (21311), (21312), (21313), (21314), (21413), (31211), (31212), (31213), "
       "(31214), (31312), (31412), (32122), (32123), (32124), (41213), (41312), (42123)}"},
      {S::Stanley, "strict partitions of 2<1", "strict_partitions", {"[2|2<1]"}, "{(21)}"},
      {S::Stanley, "strict partitions of 1<2<3", "strict_partitions", {"[3|1<2<3]"}, "{(123), (122), (112), (111)}"},
      {S::Stanley, "linear extensions of the six-point example", "linear_extensions", {"[6|{2,4}<{1,5,6},{2,4}<3]"},
       "{(312133), (213122)}"},
      {S::Stanley, "linear extensions of {1,2}", "linear_extensions", {"[2|{1,2}]"}, "{(11)}"},
      {S::Stanley, "linear extensions of 1 2", "linear_extensions", {"[2|]"}, "{(12), (21)}"},
      {S::Stanley, "L 1", "l_morphism", {"[1|]"}, "(1)"},
      {S::Stanley, "L 1 2", "l_morphism", {"[2|]"}, "(12) + (21)"},
      {S::Stanley, "L 1<2", "l_morphism", {"[2|1<2]"}, "(12)"},
      {S::Stanley, "L 2<1", "l_morphism", {"[2|2<1]"}, "(21)"},
      {S::Stanley, "L {1,2}", "l_morphism", {"[2|{1,2}]"}, "(11)"},
      {S::Stanley, "L {1,2,3}", "l_morphism", {"[3|{1,2,3}]"}, "(111)"},
      {S::Stanley, "L {1,2}<3", "l_morphism", {"[3|{1,2}<3]"}, "(112)"},
      {S::Stanley, "L {1,3}<2", "l_morphism", {"[3|{1,3}<2]"}, "(121)"},
      {S::Stanley, "L {2,3}<1", "l_morphism", {"[3|{2,3}<1]"}, "(211)"},
      {S::Stanley, "L 3<{1,2}", "l_morphism", {"[3|3<{1,2}]"}, "(221)"},
      {S::Stanley, "L 2<{1,3}", "l_morphism", {"[3|2<{1,3}]"}, "(212)"},
      {S::Stanley, "L 1<{2,3}", "l_morphism", {"[3|1<{2,3}]"}, "(122)"},
      {S::Stanley, "L 1<3, 1<2", "l_morphism", {"[3|1<3,1<2]"}, "(123) + (132)"},
      {S::Stanley, "L 2<3, 2<1", "l_morphism", {"[3|2<3,2<1]"}, "(213) + (312)"},
      {S::Stanley, "L 3<2, 3<1", "l_morphism", {"[3|3<2,3<1]"}, "(231) + (321)"},
      {S::Stanley, "L 1<2<3", "l_morphism", {"[3|1<2<3]"}, "(123)"},
      {S::Stanley, "L 2<1<3", "l_morphism", {"[3|2<1<3]"}, "(213)"},
      {S::Stanley, "L 3<1<2", "l_morphism", {"[3|3<1<2]"}, "(231)"},
      {S::Stanley, "L 1<3<2", "l_morphism", {"[3|1<3<2]"}, "(132)"},
      {S::Stanley, "L 2<3<1", "l_morphism", {"[3|2<3<1]"}, "(312)"},
      {S::Stanley, "L 3<2<1", "l_morphism", {"[3|3<2<1]"}, "(321)"},

      // Counts.
      {S::Counts, "topologies on [2]", "count_topologies", {"2"}, "4"},
      {S::Counts, "topologies on [3]", "count_topologies", {"3"}, "29"},
      {S::Counts, "topologies on [5]", "count_topologies", {"5"}, "6942"},
      {S::Counts, "packed words of length 2", "count_packed_words", {"2"}, "3"},
      {S::Counts, "packed words of length 3", "count_packed_words", {"3"}, "13"},
  };
}

}  // namespace

const std::vector<Golden>& goldens() {
  static const std::vector<Golden> g = build();
  return g;
}

std::optional<Counterexample> replay(const Golden& g) {
  std::string inputs = g.op + "(";
  for (std::size_t i = 0; i < g.args.size(); ++i) inputs += (i ? ", " : "") + g.args[i];
  inputs += ")";
  try {
    const OpResult r = run_op(g.op, g.args);
    const std::string expected = canonical_math(r.kind, g.expected);
    if (r.math == expected) return std::nullopt;
    return Counterexample{g.name, inputs, expected, r.math};
  } catch (const std::exception& e) {
    return Counterexample{g.name, inputs, g.expected, std::string("error: ") + e.what()};
  }
}

}  // namespace topohopf
