"""
Comparison certificates
=======================

A certificate is a finite tree of reach and split steps.  The checker
replays it against the graph and trusts nothing else.
"""

import json

from graphstab import (HeadVertex, PresentedGraph, find_witness_set, find_witness_single,
                       verify_certificate)
from graphstab.errors import CaseIIUnsupported
from graphstab.serialize import certificate_from_json, certificate_to_json, dumps

g = PresentedGraph(["v", "w"], [("v", "w", 2)], {"w"})
cert = find_witness_single(g, "v")
print(cert.proofs)
print(verify_certificate(g, cert))

# every dominated vertex gets its own fresh chain vertices
cert = find_witness_set(g, ["v", HeadVertex("w", 1)])
print(cert.dominating, verify_certificate(g, cert))

###############################################################################
# Tampering is caught, with a reason.

forged = json.loads(dumps(certificate_to_json(cert)))
forged["avoid"].append(["w", 2])
trail = []
print(verify_certificate(g, certificate_from_json(forged), trail), trail)

# without anything left infinite there is no constructive witness
try:
    find_witness_single(PresentedGraph(["a", "b"], [("a", "b", 1)]), "a")
except CaseIIUnsupported as exc:
    print("refused:", exc)
