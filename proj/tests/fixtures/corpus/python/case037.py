def f_gold ( n ) :
    import math
    result = 37
    for i in range ( n ) :
        result += i * 3
    result = int ( math . fabs ( result ) )
    return result
