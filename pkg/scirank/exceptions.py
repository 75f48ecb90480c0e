class ScirankError(Exception):
    """
    Base class for data errors raised by the pipeline
    """


class CorpusError(ScirankError):
    """
    The corpus cannot be turned into a ranking problem
    """


class DuplicatePaperError(CorpusError):
    """
    Two records share a paper id
    """

    def __init__(self, paper_id, line_no=None):
        self.paper_id = paper_id
        self.line_no = line_no
        where = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"duplicate paper_id {paper_id!r}{where}")


class NumericalError(ScirankError):
    """
    A non-finite value appeared in the iteration
    """

    def __init__(self, iteration, vector):
        self.iteration = iteration
        self.vector = vector
        super().__init__(f"non-finite value in {vector} authority at iteration {iteration}")


class OracleSizeError(ScirankError):
    """
    The dense combined matrix would exceed the configured size limit
    """
