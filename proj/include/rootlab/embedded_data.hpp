#pragma once

namespace rootlab::embedded {

// Data files compiled into the binary so the shipped catalog and the
// self-check inputs need no filesystem access at run time.  Definitions are
// generated at build time from the files under data/.
const char* catalog_json();
const char* ambient_riemannian_a3();
const char* ambient_aiii31_dual();
const char* ambient_bc1_restriction();

} // namespace rootlab::embedded
