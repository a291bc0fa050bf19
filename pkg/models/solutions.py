"""
Canonically ordered collections of rank-one solutions
"""

from bisect import bisect_left
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from core.constants import INFINITE_LABEL
from models.factors import RankOneFactors


class SolutionSet:
    """
    Manages the rank-one solutions of one completion problem.

    Solutions are kept deduplicated (by exact phases and float magnitudes)
    and in canonical order: phases mode-major first, then magnitudes. The
    set also records how many solutions exist in total, which can exceed
    the materialized ones when enumeration was capped, or be infinite.

    Attributes:
        solutions: Materialized solutions in canonical order
        infinite: Whether the solutions form a positive-dimensional family
        total: Total number of solutions when finite
    """

    def __init__(self, solutions: Iterable[RankOneFactors] = (), infinite: bool = False,
                 total: Optional[int] = None):
        """
        Initialize the solution set.

        Args:
            solutions: Solutions in any order
            infinite: Whether the family is infinite
            total: Total count when it exceeds the materialized solutions
        """
        self.solutions: List[RankOneFactors] = []
        self._keys: List[Tuple] = []
        self.infinite = infinite
        for solution in solutions:
            self.add_solution(solution)
        self.total = total

    def add_solution(self, solution: RankOneFactors) -> bool:
        """
        Add a solution, keeping canonical order.

        Args:
            solution: Solution to add

        Returns:
            True if added, False if an identical solution was already present

        Raises:
            TypeError: If solution is not a RankOneFactors instance
        """
        if not isinstance(solution, RankOneFactors):
            raise TypeError(f"Expected RankOneFactors instance, got {type(solution)}")
        key = solution.sort_key()
        position = bisect_left(self._keys, key)
        if position < len(self._keys) and self._keys[position] == key:
            return False
        self._keys.insert(position, key)
        self.solutions.insert(position, solution)
        return True

    def count(self) -> Union[int, str]:
        """
        Total number of solutions.

        Returns:
            Integer count, or the string "infinite"
        """
        if self.infinite:
            return INFINITE_LABEL
        if self.total is not None:
            return self.total
        return len(self.solutions)

    def is_truncated(self) -> bool:
        """True when fewer solutions are listed than exist"""
        return self.infinite or (self.total is not None and self.total > len(self.solutions))

    def has_solutions(self) -> bool:
        return self.infinite or len(self.solutions) > 0 or bool(self.total)

    def phase_keys(self) -> List[Tuple]:
        """Phase tuples of the listed solutions, in canonical order"""
        return [solution.phase_key() for solution in self.solutions]

    def same_phases(self, other: "SolutionSet") -> bool:
        """Whether two sets list exactly the same phase patterns"""
        return self.phase_keys() == other.phase_keys()

    def real_solutions(self) -> "SolutionSet":
        """Subset of solutions whose phases are all 0 or 1/2"""
        return SolutionSet(s for s in self.solutions if s.is_real())

    def conjugate(self) -> "SolutionSet":
        """Componentwise conjugate of every solution"""
        return SolutionSet((s.conjugate() for s in self.solutions), self.infinite, self.total)

    def first(self) -> Optional[RankOneFactors]:
        return self.solutions[0] if self.solutions else None

    def get_all_solutions(self) -> List[RankOneFactors]:
        """
        Get all listed solutions.

        Returns:
            Copy of the solutions list
        """
        return self.solutions.copy()

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self) -> Iterator[RankOneFactors]:
        return iter(self.solutions)

    def __getitem__(self, position: int) -> RankOneFactors:
        return self.solutions[position]

    def __repr__(self) -> str:
        return f"SolutionSet(listed={len(self.solutions)}, count={self.count()})"
