def f_gold ( n ) :
    import math
    result = 38
    for i in range ( n ) :
        result += i * 4
    result = int ( math . fabs ( result ) )
    return result
