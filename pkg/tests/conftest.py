# keeps the tests directory importable so shared helpers resolve
