from latmod import console


def test_verbosity_levels(capsys):
    before = console.get_verbosity()
    try:
        console.set_verbosity(0)
        console.ok("hidden")
        console.error("shown")
        err = capsys.readouterr().err
        assert "hidden" not in err and "[ERROR] shown" in err

        console.set_verbosity(2)
        console.info("chatty")
        console.warn("careful")
        err = capsys.readouterr().err
        assert "[INFO] chatty" in err and "[WARN] careful" in err
    finally:
        console.set_verbosity(before)
