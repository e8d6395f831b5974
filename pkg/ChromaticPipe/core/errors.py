class PipeError(Exception):
    """ Base class of every error raised by ChromaticPipe
        
        Attributes:
            message (string): message that will be displayed on throw        
    """
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)

class GraphStructureError(PipeError):
    """ Exception raised when a mixed graph (or an orientation of one) would 
        violate its invariants: loops, unknown endpoints, duplicate vertices 
        or directed cycles in an orientation.
    """

class GraphParseError(PipeError):
    """ Exception raised when a graph file does not follow the graph text 
        format.
        
        Attributes:
            line (int): 1-based line number of the offending directive
            message (string): message that will be displayed on throw        
    """
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")

class MissingElementError(PipeError):
    """ Exception raised when an edge, arc or vertex is not part of the graph
        it is looked up in.
    """

class ThresholdError(PipeError):
    """ Exception raised when a palette size x and threshold y do not satisfy
        the range a counting function is defined on.
    """

class BoundExceededError(PipeError):
    """ Exception raised when a graph or poset is larger than the configured 
        bound of an exact method.
    """

class PosetError(PipeError):
    """ Exception raised when a bicolored poset is malformed: a cyclic 
        relation, unknown elements or celeste elements outside the poset.
    """

class UnknownIdentityError(PipeError):
    """ Exception raised when no verification plugin answers to the 
        requested identity name.
    """
