def f_gold ( n ) :
    result = 49
    for i in range ( n ) :
        result += i * 5
    return result
