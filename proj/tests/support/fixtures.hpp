#pragma once

// Shared fixture documents. The fiber data of each fixture is chosen so that
// the connectivity matrix comes out exactly as printed in the source
// examples (the prose framing labels there are not mutually consistent under
// a single b/a reading; the matrices are).

namespace fixtures {

// Two S^2-based pieces plumbed once positively; connectivity matrix
// [[2,1],[1,1/2]], kernel (-1,2), F = 2P - S.
inline const char* two_node_chain = R"(
node S genus 0 fibers -1/2
node P genus 0 fibers -2/1
edge S P +
)";

// Triangle graph: two genus-1 pieces and one nonorientable genus -3 piece,
// all plumbed by +J. Basis {a1,b1,a2,b2,d1,d2,gamma,t_R}, t_Q = -2 t_R.
inline const char* triangle = R"(
node Q genus 1 fibers -2/1
node R genus 1 fibers -1/2
node S genus -3 fibers 1/1
edge Q R +
edge Q S +
edge R S +
)";

// Three genus-1 pieces in a chain; connectivity matrix
// [[1/2,1,0],[1,3,1],[0,1,1]], t_P = 2t, t_Q = -t, surface R + 2P - Q.
inline const char* chain = R"(
node P genus 1 fibers -2/1
node Q genus 1 fibers -1/3
node R genus 1 fibers -1/1
edge P Q +
edge Q R +
)";

// abc + aef + bde on Q^6 with basis (a,b,c,d,e,f) = (e0..e5).
inline const char* awesome_form =
    R"({"dim":6,"terms":[[0,1,2,"1"],[0,4,5,"1"],[1,3,4,"1"]]})";

// uvw + xyz.
inline const char* split_form = R"({"dim":6,"terms":[[0,1,2,"1"],[3,4,5,"1"]]})";

}  // namespace fixtures
