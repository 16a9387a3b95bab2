from typing import AbstractSet, FrozenSet, Sequence, Tuple

CandidateId = int
LinearOrder = Tuple[CandidateId, ...]
CandidateSet = FrozenSet[CandidateId]
# anything that can be turned into a candidate set
Candidates = AbstractSet[CandidateId]
VoterOrder = Tuple[int, ...]
Orders = Sequence[Sequence[CandidateId]]
