# demo.py - Minimal channelkit demo
import warnings

from channelkit import binary_flow, carries_info, f_elim_candidates, f_intro, satisfies
from channelkit.utils.fixtures import (
    LANGUAGE_Y, LANGUAGE_Z, binary_channel, classification_m, classification_n, infomorphism_f, sequent,
)

print("🚀 channelkit Demo - Information Flow in a Binary Channel")
print("=" * 50)

m, n, f = classification_m(), classification_n(), infomorphism_f()
print("Classification M:", m.rows())
print("Classification N:", n.rows())

# f-Intro: validity moves forward along f
s = sequent(LANGUAGE_Y, "|- a")
moved = f_intro(f, s)
print(f"\n📤 f-Intro: {s} (valid in M: {satisfies(m, s)}) becomes {moved} (valid in N: {satisfies(n, moved)})")

# f-Elim: only nonvalidity moves back
q = sequent(LANGUAGE_Z, "p |- p")
print(f"📥 f-Elim candidates for {q} (valid in N: {satisfies(n, q)}):")
for candidate in sorted(f_elim_candidates(f, q), key=str):
    print(f"   {candidate}: valid in M = {satisfies(m, candidate)}")

# p-Intro then d-Elim along M → N ← M
print("\n🔁 p-Intro then d-Elim along M → N ← M:")
for candidate in sorted(binary_flow(f, f, s), key=str):
    print(f"   {candidate}")

# Flow across the covering channel {M, D} → K
ch = binary_channel()
print(f"\n📡 Channel core K: {ch.core.rows()}")
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    for (i, a_i), (j, a_j) in [
        (("M", "|- a"), ("D", "|- p")),
        (("M", "|- a"), ("M", "|- b")),
    ]:
        verdict = carries_info(ch, i, sequent(ch.system[i].types, a_i), j, sequent(ch.system[j].types, a_j))
        if verdict:
            print(f"✅ {a_i} at {i} carries {a_j} at {j}")
        else:
            print(f"❌ {a_i} at {i} does not carry {a_j} at {j}; defeated by {verdict.via.defeating_state}")

print("\n🎯 Done: intro keeps validity, elim keeps nonvalidity, flow is decided inside the core.")
