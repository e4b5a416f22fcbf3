"""Sweeping structural statements over every connection set of a given order.

Each check returns a certificate that serializes to JSON, so a run can be
archived and the evidence digest compared later.
"""

# %%
from circulant_chi.checks import (
    STATEMENTS,
    CheckCertificate,
    check_clique_bound,
    check_congruence,
    check_lemma_2q,
    check_lemma_dq1,
    verify_nonvanishing,
)

for key, text in STATEMENTS.items():
    print(f"{key:11s} {text}")

# %% Non-vanishing for prime powers and twice odd prime powers
for n in (9, 25, 10, 18):
    cert = verify_nonvanishing(n)
    print(n, cert.statement_id, cert.passed, cert.instances_checked, cert.evidence["residues_mod_p"])

# %% Clique-number statements
print(check_clique_bound(14).evidence)
print(check_lemma_2q(7).evidence)
print(check_lemma_dq1(3, 5).evidence)

# %% Clique counts for n = 2 * 3^2
cert = check_congruence(3, 2)
print(cert.passed, cert.evidence["count_histogram"])

# %% Certificates round-trip through JSON
blob = cert.to_json()
print(CheckCertificate.from_json(blob) == cert, cert.evidence_digest[:16])

# %% Sampled mode for n = 50 (a few hundred sets keeps this quick)
cert = check_congruence(5, 2, sample=300, seed=1)
print(cert.mode, cert.instances_checked, cert.passed, cert.evidence["nonzero_instances"])
