def check_kwargs(
    parameter_list,
    caller="unknown",
    **kwargs
):
    """
    Reject keyword arguments that are not named in parameter_list. Used by the
    error handler, the configurator and the value classes which take **kwargs.
    """
    if not parameter_list:
        raise ValueError("check_kwargs: Parameter list must be specified")

    if len(kwargs) < 1:
        return True

    unexpected = sorted(kw for kw in kwargs if kw not in parameter_list)
    if unexpected:
        raise TypeError(
            "Parameter(s) {} not valid for {}; valid parameters are: {}"
            .format(", ".join(unexpected), caller, list(parameter_list))
        )
    return True
